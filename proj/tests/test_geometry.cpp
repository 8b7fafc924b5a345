#include <stdexcept>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tw/contour.hpp"
#include "tw/geometry.hpp"

using namespace tw;

namespace {
const double kSqrt3 = std::numbers::sqrt3;
}

TEST_CASE("Q_M membership and margins") {
  const PolyhedronQM q(100);
  auto m = q.membership({0, 0, 0, 0});
  CHECK(m.inside);
  CHECK(m.margin == doctest::Approx(0.01));
  m = q.membership({0.01, 0, 0, 0});
  CHECK(m.inside);
  CHECK(m.margin == doctest::Approx(0.0));
  CHECK_FALSE(q.membership({0.02, 0, 0, 0}).inside);
  CHECK_FALSE(q.membership({0, 0, 0, 100.5}).inside);
  CHECK_THROWS(PolyhedronQM(1.0));
}

TEST_CASE("defining moduli are at most 1 exactly on Q_M") {
  const PolyhedronQM q(10);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> x(-0.2, 0.2), y(-15, 15);
  for (int i = 0; i < 2000; ++i) {
    const PointC2 p{x(rng), y(rng), x(rng), y(rng)};
    const auto mod = q.defining_moduli(p);
    bool all = true;
    for (double v : mod) all = all && v <= 1.0;
    CHECK(all == q.membership(p).inside);
  }
}

TEST_CASE("sector_of: examples and band") {
  CHECK(sector_of({0, 5, 0, -3}, 1e-9) == Stratum::Sigma);
  for (double s : {1e-3, 0.5, 1.0}) CHECK(sector_of({0.001 * s, 0, -0.0005 * s, 0}, 1e-12) == Stratum::Z1);
  CHECK(sector_of({-0.001, 0, 0, 0}, 1e-12) == Stratum::Z3);
  // rays at 0, 120, 240 degrees are H2, H3, H1
  CHECK(sector_of({1e-3, 0, 0, 0}, 1e-12) == Stratum::H2);
  CHECK(sector_of({-0.5e-3, 0, 0.5e-3 * kSqrt3, 0}, 1e-12) == Stratum::H3);
  CHECK(sector_of({-0.5e-3, 0, -0.5e-3 * kSqrt3, 0}, 1e-12) == Stratum::H1);
}

TEST_CASE("sector_of ignores the imaginary parts") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> x(-0.01, 0.01), y(-100, 100);
  for (int i = 0; i < 1000; ++i) {
    const PointC2 p{x(rng), y(rng), x(rng), y(rng)};
    const PointC2 shifted{p.x1, y(rng), p.x2, y(rng)};
    CHECK(sector_of(p, 1e-9) == sector_of(shifted, 1e-9));
  }
}

TEST_CASE("phi and sector rule") {
  CHECK(phi(1, 0.3, 0.7) == doctest::Approx(0.7));
  CHECK(phi(2, 1, 0) == doctest::Approx(-kSqrt3));
  CHECK(phi(3, 1, 0) == doctest::Approx(kSqrt3));
  CHECK(phi(1, 1, 2) + phi(2, 1, 2) + phi(3, 1, 2) == doctest::Approx(-2.0));
  CHECK_THROWS(phi(4, 0, 0));
}

TEST_CASE("graph_point examples") {
  GraphSurface lin;
  lin.epsilon = 0.5;
  const auto o = graph_point(lin, 0, 0);
  CHECK(o.x1 == 0);
  CHECK(o.y2 == 0);

  const Scales sc;
  const auto g = linear_member(2, sc);
  const double x = 0.004, y = -0.3, M = sc.M, kR = 2 * sc.R;
  const auto p = graph_point(g, x, y);
  CHECK(p.x1 == doctest::Approx(y / M));
  CHECK(p.y1 == doctest::Approx(-x / M + kR));
  CHECK(p.x2 == doctest::Approx(x));
  CHECK(p.y2 == doctest::Approx(y + kR));

  GraphSurface cubic;
  cubic.kind = GraphKind::Cubic;
  cubic.epsilon = 0.1;
  const auto c = graph_point(cubic, 0, 1);
  CHECK(c.x1 == doctest::Approx(0.2));
  CHECK(c.y1 == doctest::Approx(0.0));
  CHECK(c.x2 == doctest::Approx(0.0));
  CHECK(c.y2 == doctest::Approx(1.0));

  CHECK_THROWS_AS(graph_point(g, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("graph_derivative agrees with finite differences") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-0.9, 0.9), t(0, 6.28);
  for (int trial = 0; trial < 50; ++trial) {
    GraphSurface g;
    g.kind = trial % 2 ? GraphKind::Cubic : GraphKind::Linear;
    g.epsilon = 0.3;
    g.theta = t(rng);
    g.translation = {u(rng), u(rng), u(rng), u(rng)};
    const cplx z(u(rng), u(rng));
    const double h = 1e-6;
    const auto a = graph_point(g, z.real() + h, z.imag());
    const auto b = graph_point(g, z.real() - h, z.imag());
    const auto d = graph_derivative(g, z);
    CHECK((a.x1 - b.x1) / (2 * h) == doctest::Approx(d[0].real()).epsilon(1e-6));
    CHECK((a.y1 - b.y1) / (2 * h) == doctest::Approx(d[0].imag()).epsilon(1e-6));
    CHECK((a.x2 - b.x2) / (2 * h) == doctest::Approx(d[1].real()).epsilon(1e-6));
    CHECK((a.y2 - b.y2) / (2 * h) == doctest::Approx(d[1].imag()).epsilon(1e-6));
  }
}

TEST_CASE("bridge points of linear graphs: one point with |det| = epsilon") {
  const PolyhedronQM q(100);
  const Scales sc;
  for (int k = 1; k <= 3; ++k) {
    const auto s = bridge_points(linear_member(k, sc), q, 1e-9);
    REQUIRE(s.points.size() == 1);
    CHECK(s.points[0].point.x1 == doctest::Approx(0).epsilon(1e-12));
    CHECK(s.points[0].point.y1 == doctest::Approx(k * sc.R));
    CHECK(s.points[0].point.y2 == doctest::Approx(k * sc.R));
    CHECK(s.points[0].transversality == doctest::Approx(1.0 / sc.M));
  }
  // rotated, untranslated: the origin, and |det| = epsilon for any angle
  for (double theta : {2 * std::numbers::pi / 3, 0.7, 4.0}) {
    GraphSurface g;
    g.epsilon = 0.25;
    g.theta = theta;
    g.domain = {-0.5, 0.5, -0.5, 0.5};
    const auto s = bridge_points(g, PolyhedronQM(2), 1e-9, false);
    REQUIRE(s.points.size() == 1);
    CHECK(std::abs(s.points[0].x) < 1e-12);
    CHECK(std::abs(s.points[0].y) < 1e-12);
    CHECK(s.points[0].transversality == doctest::Approx(0.25));
  }
}

TEST_CASE("bridge points of the pleat sit at x = -c, y in {0, +-sqrt(3c^2 - 1)}") {
  const Scales sc;
  const double c = 1 + sc.epsilon_prime;
  const double y0 = std::sqrt(3 * c * c - 1);
  for (Sector s = 1; s <= 3; ++s) {
    const auto g = pleat_member(0, s, sc);
    const auto found = bridge_points(g, PolyhedronQM(sc.M), 1e-9, false);
    REQUIRE(found.points.size() == 3);
    const double ys[3] = {-y0, 0.0, y0};
    for (int i = 0; i < 3; ++i) {
      CHECK(found.points[i].x == doctest::Approx(-c).epsilon(1e-12));
      CHECK(found.points[i].y == doctest::Approx(ys[i]).scale(1.0).epsilon(1e-12));
      CHECK(found.points[i].residual < 1e-12);
      CHECK(found.points[i].transversality > 1e-3);
    }
  }
}

TEST_CASE("pleat placement: perturbation sector round-trips through the angle") {
  for (Sector s = 1; s <= 3; ++s) CHECK(pleat_perturbation_sector(pleat_angle(s)) == s);
  CHECK(pleat_angle(2) == doctest::Approx(0.0));
}

TEST_CASE("tangle traces of linear graphs are single arcs") {
  const PolyhedronQM q(100);
  const auto g = linear_member(1, Scales{});
  for (Sector s = 1; s <= 3; ++s) {
    const auto t = tangle_trace(g, s, q, 128);
    CHECK(t.level_components == 1);
    CHECK(t.handlebody_arcs == 1);
    CHECK_FALSE(t.grid_too_coarse);
  }
  // phi_1 o G_k = x: the level set is x = 0
  const auto t = tangle_trace(g, 1, q, 128);
  for (const auto& pt : t.polylines[0].points) CHECK(std::abs(pt[0]) < 1e-12);
  CHECK_THROWS(tangle_trace(g, 1, q, 32));
}

TEST_CASE("certificates: linear families and single pleats") {
  const Scales sc;
  const PolyhedronQM q(sc.M);
  const Tolerances tol;
  for (int n = 1; n <= 3; ++n) {
    std::vector<GraphSurface> fam;
    for (int k = 1; k <= n; ++k) fam.push_back(linear_member(k, sc));
    const auto cert = certify_bridge_position(fam, q, sc.R, tol);
    CHECK(cert.valid);
    CHECK(cert.bridge_points.size() == static_cast<std::size_t>(n));
    CHECK(cert.arcs_per_handlebody == Triple{n, n, n});
    CHECK(cert.patches_per_sector == Triple{n, n, n});
    CHECK(cert.max_residual < 1e-9);

    for (Sector s = 1; s <= 3; ++s) {
      auto pleated = fam;
      pleated[n - 1] = pleat_member(n, s, sc);
      const auto pc = certify_bridge_position(pleated, q, sc.R, tol);
      CHECK(pc.valid);
      CHECK(pc.bridge_points.size() == static_cast<std::size_t>(n + 2));
      Triple patches{n, n, n};
      patches[next_sector(s) - 1] += 1;
      CHECK(pc.patches_per_sector == patches);
    }
  }
}

TEST_CASE("certificate fails against wrong declared data") {
  const Scales sc;
  const PolyhedronQM q(sc.M);
  std::vector<GraphSurface> fam{linear_member(1, sc)};
  const auto cert = certify_bridge_position(fam, q, sc.R, Tolerances{}, trivial_disks(2));
  CHECK_FALSE(cert.valid);
  CHECK_FALSE(cert.failures.empty());
}

TEST_CASE("isotopy into the boundary") {
  const Scales sc;
  const PolyhedronQM q(sc.M);
  for (int k = 1; k <= 3; ++k) CHECK(isotopy_check(linear_member(k, sc), q, 2000).ok);
  Scales bad = sc;
  bad.R = bad.M;
  const auto r = isotopy_check(linear_member(1, bad), q, 2000);
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_violation);
  CHECK_FALSE(r.first_violation->reason.empty());
  CHECK_THROWS(isotopy_check(pleat_member(1, 1, sc), q, 10));
}

TEST_CASE("marching squares: circle is one closed loop, two circles are two") {
  const Rect r{-2, 2, -2, 2};
  auto grid = sample_grid(r, 80, 80, [](double x, double y) { return x * x + y * y - 1; });
  auto ls = trace_zero_level(grid);
  REQUIRE(ls.components() == 1);
  CHECK(ls.polylines[0].closed);
  grid = sample_grid(r, 80, 80, [](double x, double y) {
    return std::min((x - 1) * (x - 1) + y * y, (x + 1) * (x + 1) + y * y) - 0.25;
  });
  CHECK(trace_zero_level(grid).components() == 2);
  // a line crossing the box is one open arc; splitting at y = 0 gives two
  grid = sample_grid(r, 64, 64, [](double x, double) { return x - 0.1; });
  ls = trace_zero_level(grid);
  REQUIRE(ls.components() == 1);
  CHECK_FALSE(ls.polylines[0].closed);
  const auto pieces = split_where_positive(ls.polylines[0], [](double, double y) { return std::abs(y) - 0.5; });
  CHECK(pieces.size() == 2);
}

TEST_CASE("count_regions flood fill") {
  // 3x3 nodes: label 1 in two opposite corners
  std::vector<int> labels{1, 0, 0, 0, 0, 0, 0, 0, 1};
  CHECK(count_regions(2, 2, labels, 1) == 2);
  labels = {1, 1, 1, 0, 0, 1, 1, 1, 1};
  CHECK(count_regions(2, 2, labels, 1) == 1);
  CHECK_THROWS(count_regions(3, 3, labels, 1));
}
