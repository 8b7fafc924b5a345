#include <stdexcept>
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tw/bridge.hpp"
#include "tw/cover.hpp"
#include "tw/permutation.hpp"

using namespace tw;

TEST_CASE("trivial disks and perturbation counts") {
  for (int n = 0; n <= 5; ++n) {
    const auto s = trivial_disks(n);
    CHECK(validate_bridge(s).valid());
    CHECK(s.bridge_points == n);
    CHECK(s.arcs == Triple{n, n, n});
    CHECK(s.patches == Triple{n, n, n});
    CHECK(surface_euler(s) == n);
  }
  const auto s = perturb(trivial_disks(2), {3, std::nullopt});
  CHECK(s.bridge_index == 1);
  CHECK(s.bridge_points == 4);
  CHECK(s.arcs == Triple{3, 3, 3});
  CHECK(s.patches == Triple{3, 2, 2});
}

TEST_CASE("perturbation preserves the surface and matches the cell oracle") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> sector(1, 3);
  for (int n = 1; n <= 4; ++n) {
    auto s = trivial_disks(n);
    for (int step = 0; step < 10; ++step) {
      const Sector l = sector(rng);
      const auto t = perturb(s, {l, step % n});
      CHECK(validate_bridge(t).valid());
      CHECK(t.bridge_points == s.bridge_points + 2);
      for (int i = 0; i < 3; ++i) {
        CHECK(t.patches[i] == s.patches[i] + (i + 1 == next_sector(l) ? 1 : 0));
        CHECK(t.arcs[i] == s.arcs[i] + 1);
      }
      CHECK(surface_euler(t) == surface_euler(s));
      CHECK(surface_euler(t) == oracle::bridge_surface_euler(t.bridge_points, t.arcs, t.patches));
      s = t;
    }
  }
}

TEST_CASE("bridge validation") {
  auto s = trivial_disks(2);
  s.bridge_points = 3;
  CHECK_FALSE(validate_bridge(s).valid());
  s = trivial_disks(2);
  s.points_per_component = {1, 2};
  CHECK_FALSE(validate_bridge(s).valid());
  s = trivial_disks(2);
  s.arcs[0] = 5;
  CHECK_FALSE(validate_bridge(s).valid());
  BridgeSurfaceData closed;
  closed.closed_ambient = true;
  closed.bridge_index = 2;
  closed.bridge_points = 4;
  closed.arcs = {2, 2, 2};
  closed.patches = {1, 1, 1};
  CHECK(validate_bridge(closed).valid());
}

TEST_CASE("permutations: composition, cycles, transpositions") {
  const auto a = Permutation::transposition(3, 1, 2);
  const auto b = Permutation::transposition(3, 2, 3);
  const auto ab = a * b;
  CHECK(ab.cycle_type() == std::vector<int>{3});
  CHECK(ab.inverse() * ab == Permutation(3));
  CHECK(a.is_transposition());
  CHECK_FALSE(ab.is_transposition());
  CHECK(a.transposed_pair() == std::pair<int, int>{1, 2});
  CHECK_THROWS(Permutation(std::vector<int>{0, 0, 1}));
}

TEST_CASE("orbits agree with the BFS oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 7);
    std::vector<Permutation> gens;
    std::vector<std::vector<int>> raw;
    const int count = static_cast<int>(rng() % 4);
    for (int g = 0; g < count && d > 1; ++g) {
      const int i = 1 + static_cast<int>(rng() % d);
      int j = 1 + static_cast<int>(rng() % d);
      if (i == j) j = i % d + 1;
      gens.push_back(Permutation::transposition(d, i, j));
      raw.push_back(gens.back().images());
    }
    CHECK(static_cast<int>(orbits(d, gens).size()) == oracle::orbit_count(d, raw));
    CHECK(is_transitive(d, gens) == (oracle::orbit_count(d, raw) == 1));
  }
}

TEST_CASE("lift_stratum: Riemann-Hurwitz for a disk") {
  for (int n = 1; n <= 6; ++n) {
    const auto rho = standard_rho(n);
    const auto lift = lift_stratum(1, rho.meridian_images, {}, rho.degree);
    CHECK(lift.euler_char == 1);
    CHECK(lift.components == 1);
  }
  // two disjoint sheets over an unbranched disk
  const auto lift = lift_stratum(1, {}, {}, 2);
  CHECK(lift.components == 2);
  CHECK(lift.per_component_euler == std::vector<int>{1, 1});
  CHECK_THROWS_AS(lift_stratum(1, {Permutation(std::vector<int>{1, 2, 0})}, {}, 3),
                  std::invalid_argument);
}

TEST_CASE("pullback of trivial disks is the standard trisection") {
  for (int n = 1; n <= 5; ++n) {
    const auto d = pullback_details(standard_b4(), trivial_disks(n), standard_rho(n));
    CHECK(d.upstairs == standard_b4());
    CHECK(d.total_euler == 1);
  }
  CHECK(pullback_trisection(standard_b4(), trivial_disks(0), MonodromyRep{1, {}}) == standard_b4());
}

TEST_CASE("pullback rejects unsupported inputs") {
  CHECK_THROWS_AS(pullback_trisection(RelTrisectionParams{1, {0, 0, 0}, 0, 1}, trivial_disks(1),
                                      standard_rho(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(pullback_trisection(standard_b4(), trivial_disks(2), standard_rho(1)),
                  std::invalid_argument);
  MonodromyRep bad{3, {Permutation::transposition(3, 1, 2), Permutation::transposition(3, 1, 2)}};
  CHECK_THROWS_AS(pullback_trisection(standard_b4(), trivial_disks(2), bad), std::invalid_argument);
  CHECK_THROWS_AS(standard_rho(0), std::invalid_argument);
}

TEST_CASE("perturbation gives stabilization in the next sector, exhaustively") {
  for (int n = 1; n <= 4; ++n)
    for (Sector l = 1; l <= 3; ++l)
      for (int c = 0; c < n; ++c) {
        auto locus = trivial_disks(n);
        locus.points_per_component.assign(n, 1);
        CHECK(perturbation_stabilization_check(locus, standard_rho(n), {l, c}));
        // and again on an already perturbed locus
        const auto once = perturb(locus, {next_sector(l), (c + 1) % n});
        CHECK(perturbation_stabilization_check(once, standard_rho(n), {l, c}));
      }
}

TEST_CASE("other transitive simple monodromies: star transpositions") {
  for (int n = 2; n <= 4; ++n) {
    MonodromyRep star{static_cast<std::size_t>(n) + 1, {}};
    for (int k = 2; k <= n + 1; ++k) star.meridian_images.push_back(Permutation::transposition(n + 1, 1, k));
    CHECK(pullback_trisection(standard_b4(), trivial_disks(n), star) == standard_b4());
    for (Sector l = 1; l <= 3; ++l) CHECK(perturbation_stabilization_check(trivial_disks(n), star, {l, 0}));
  }
}
