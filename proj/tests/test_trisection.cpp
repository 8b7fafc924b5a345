#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "tw/trisection.hpp"

using namespace tw;

TEST_CASE("euler_char_closed matches the cell oracle") {
  for (int g = 0; g <= 6; ++g)
    for (int k1 = 0; k1 <= g; ++k1)
      for (int k2 = 0; k2 <= g; ++k2)
        for (int k3 = 0; k3 <= g; ++k3) {
          const TrisectionParams p{g, {k1, k2, k3}};
          CHECK(euler_char_closed(p) == oracle::closed_euler(g, p.k));
        }
  CHECK(euler_char_closed({0, {0, 0, 0}}) == 2);
  CHECK(euler_char_closed({1, {1, 0, 0}}) == 2);
}

TEST_CASE("euler_char_relative matches the cell oracle") {
  for (int b = 1; b <= 3; ++b)
    for (int g = 0; g <= 4; ++g)
      for (int p = 0; p <= g; ++p)
        for (int k1 = 0; k1 <= g + b - 1; ++k1)
          for (int k3 = 0; k3 <= g + b - 1; ++k3) {
            const RelTrisectionParams r{g, {k1, 0, k3}, p, b};
            CHECK(euler_char_relative(r) == oracle::relative_euler(g, r.k, p, b));
          }
  CHECK(euler_char_relative(standard_b4()) == 1);
}

TEST_CASE("validation rejects out-of-range parameters") {
  CHECK(validate_params(TrisectionParams{1, {1, 0, 0}}).valid());
  CHECK_FALSE(validate_params(TrisectionParams{1, {2, 0, 0}}).valid());
  CHECK_FALSE(validate_params(TrisectionParams{-1, {0, 0, 0}}).valid());
  CHECK_FALSE(validate_params(RelTrisectionParams{0, {0, 0, 0}, 1, 1}).valid());
  CHECK_FALSE(validate_params(RelTrisectionParams{0, {0, 0, 0}, 0, 0}).valid());
  CHECK(validate_params(RelTrisectionParams{0, {0, 0, 0}, 0, 1}).valid());
  CHECK_THROWS_AS(euler_char_closed({1, {2, 0, 0}}), std::invalid_argument);
}

TEST_CASE("connected sum and stabilization arithmetic") {
  const TrisectionParams a{1, {1, 0, 0}}, b{1, {0, 1, 0}};
  CHECK(connected_sum(a, b) == TrisectionParams{2, {1, 1, 0}});
  for (Sector s = 1; s <= 3; ++s) {
    const auto up = stabilize(standard_b4(), s);
    CHECK(up.genus == 1);
    CHECK(up.k[s - 1] == 1);
    CHECK(euler_char_relative(up) == euler_char_relative(standard_b4()));
  }
  // chi(A # B) = chi(A) + chi(B) - 2
  for (int g1 = 0; g1 <= 3; ++g1)
    for (int g2 = 0; g2 <= 3; ++g2) {
      const TrisectionParams x{g1, {g1, 0, 0}}, y{g2, {0, 0, g2}};
      CHECK(euler_char_closed(connected_sum(x, y)) ==
            euler_char_closed(x) + euler_char_closed(y) - 2);
    }
}

TEST_CASE("stabilization_delta inverts iterated stabilization") {
  RelTrisectionParams p = standard_b4();
  const Triple n{2, 0, 3};
  for (Sector s = 1; s <= 3; ++s)
    for (int i = 0; i < n[s - 1]; ++i) p = stabilize(p, s);
  CHECK(p == RelTrisectionParams{5, {2, 0, 3}, 0, 1});
  auto d = stabilization_delta(p, standard_b4());
  REQUIRE(d);
  CHECK(*d == n);
  CHECK_FALSE(stabilization_delta(RelTrisectionParams{1, {0, 0, 0}, 0, 1}, standard_b4()));
  CHECK_THROWS_AS(stabilization_delta(Params{TrisectionParams{}}, Params{standard_b4()}),
                  std::invalid_argument);
}

TEST_CASE("unbalanced S4 diagram: boundary homology is (Z, 0, 0)") {
  for (Sector s = 1; s <= 3; ++s) {
    const auto d = unbalanced_s4_diagram(s);
    CHECK(validate_diagram(d).valid());
    const auto h = boundary_homology(d);
    // pair (s, s+1) has parallel curves
    for (int i = 0; i < 3; ++i) {
      const bool parallel = (i + 1) == s;
      CHECK(h[i].group.to_string() == (parallel ? "Z" : "0"));
    }
  }
  const auto h = boundary_homology(unbalanced_s4_diagram(1));
  CHECK(h[0].group == AbelianGroup{1, {}});
  CHECK(h[1].group.trivial());
  CHECK(h[2].group.trivial());
}

TEST_CASE("heegaard_h1 of genus-one splittings agrees with |det| of the pairing") {
  for (int p = 0; p <= 7; ++p)
    for (int q = -3; q <= 3; ++q) {
      const CutSystem a{{1, 0}}, b{{q, p}};
      const auto h = heegaard_h1(a, b, 1);
      const auto order = oracle::h1_order({{oracle::symplectic(a[0], b[0])}});
      if (order == 0) CHECK(h.group.free_rank == 1);
      else CHECK(h.group.to_string() == (order == 1 ? "0" : "Z/" + std::to_string(order)));
    }
  CHECK_THROWS_AS(heegaard_h1({{1, 0}}, {{0, 1}}, 2), std::invalid_argument);
}

TEST_CASE("diagram validation catches malformed cut systems") {
  TrisectionDiagram d = unbalanced_s4_diagram(1);
  d.cut_systems[0][0] = {2, 0};  // not primitive
  CHECK_FALSE(validate_diagram(d).valid());
  d = unbalanced_s4_diagram(1);
  d.cut_systems[1].push_back({0, 1});  // too many curves
  CHECK_FALSE(validate_diagram(d).valid());
  d = unbalanced_s4_diagram(1);
  d.cut_systems[2][0] = {1, 0, 0};  // wrong length
  CHECK_FALSE(validate_diagram(d).valid());
}

TEST_CASE("diagram connected sum is a block sum") {
  const auto a = unbalanced_s4_diagram(1);
  const auto b = unbalanced_s4_diagram(2);
  const auto c = connected_sum(a, b);
  CHECK(c.genus == 2);
  CHECK(validate_diagram(c).valid());
  const auto h = boundary_homology(c);
  // H1 of a connected sum is the direct sum
  CHECK(h[0].group.free_rank == 1);
  CHECK(h[1].group.free_rank == 1);
  CHECK(h[2].group.trivial());
}

TEST_CASE("spine equality ignores curve order and sign") {
  auto d = unbalanced_s4_diagram(3);
  auto e = d;
  for (auto& v : e.cut_systems[0][0]) v = -v;
  CHECK(spine_equal(make_spine(d), make_spine(e)));
  CHECK_FALSE(spine_equal(make_spine(d), make_spine(unbalanced_s4_diagram(1))));
  const auto big = connected_sum(unbalanced_s4_diagram(1), unbalanced_s4_diagram(2));
  auto swapped = big;
  std::swap(swapped.cut_systems[0][0], swapped.cut_systems[0][1]);
  CHECK(spine_equal(make_spine(big), make_spine(swapped)));
}

TEST_CASE("sector indexing is cyclic") {
  CHECK(next_sector(3) == 1);
  CHECK(prev_sector(1) == 3);
  for (Sector s = 1; s <= 3; ++s) CHECK(prev_sector(next_sector(s)) == s);
  CHECK_THROWS(require_sector(0));
  CHECK_THROWS(require_sector(4));
}
