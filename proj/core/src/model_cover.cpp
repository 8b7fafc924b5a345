#include "tw/model_cover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tw {

Poly model_polynomial(int n, double epsilon) {
  Poly f(static_cast<std::size_t>(n) + 2, cplx(0.0));
  f[1] = -epsilon * (n + 1);
  f[n + 1] = 1.0;
  return f;
}

namespace {

constexpr double kPi = std::numbers::pi;

// Sheet labels: roots of f(z) = 0 ordered by (real, imag).
std::vector<cplx> base_fiber(const Poly& f) {
  auto r = poly_roots(f);
  std::sort(r.begin(), r.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return r;
}

std::optional<Permutation> loop_permutation(const Poly& f, const std::vector<cplx>& base,
                                            const std::function<cplx(double)>& loop) {
  auto end = track_roots(f, loop, base);
  if (!end) return std::nullopt;
  std::vector<int> images(base.size(), -1);
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < base.size(); ++j)
      if (std::abs((*end)[i] - base[j]) < std::abs((*end)[i] - base[best])) best = j;
    images[i] = static_cast<int>(best);
  }
  try {
    return Permutation(images);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

PolyCoverReport polynomial_cover_check(int n, double epsilon, int regular_values,
                                       std::uint64_t seed, double tol) {
  if (n < 1) throw std::invalid_argument("polynomial_cover_check: n must be at least 1");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("polynomial_cover_check: epsilon must be positive");
  }
  PolyCoverReport rep;
  rep.n = n;
  rep.epsilon = epsilon;
  const Poly f = model_polynomial(n, epsilon);
  const std::size_t degree = static_cast<std::size_t>(n) + 1;

  // (a) critical points
  rep.critical_points = poly_roots(poly_derivative(f));
  std::sort(rep.critical_points.begin(), rep.critical_points.end(), [](cplx a, cplx b) {
    auto arg = [](cplx z) { double t = std::arg(z); return t < -1e-12 ? t + 2 * kPi : t; };
    return arg(a) < arg(b);
  });
  const double root = std::pow(epsilon, 1.0 / n);
  for (int k = 0; k < n; ++k) {
    const cplx expected = std::polar(root, 2.0 * kPi * k / n);
    double best = std::numeric_limits<double>::infinity();
    for (cplx c : rep.critical_points) best = std::min(best, std::abs(c - expected));
    rep.critical_point_error = std::max(rep.critical_point_error, best);
  }
  if (static_cast<int>(rep.critical_points.size()) != n || rep.critical_point_error > tol) {
    rep.failures.push_back("critical points differ from the n-th roots of epsilon");
  }
  double value_radius = 0.0;
  for (cplx c : rep.critical_points) {
    rep.critical_values.push_back(poly_eval(f, c));
    value_radius = std::max(value_radius, std::abs(rep.critical_values.back()));
  }
  rep.disk_radius = 2.0 * value_radius;

  // (b) sheet counts over random regular values in the disk
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double keep_out = 1e-3 * value_radius;
  while (rep.regular_values_tested < regular_values) {
    const cplx w = std::polar(rep.disk_radius * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
    if (std::any_of(rep.critical_values.begin(), rep.critical_values.end(),
                    [&](cplx v) { return std::abs(w - v) < keep_out; })) {
      continue;
    }
    Poly g = f;
    g[0] -= w;
    const auto roots = poly_roots(g);
    const double scale = 1e-7 * (1.0 + root);
    if (distinct_roots(roots, scale).size() != degree) ++rep.sheet_count_failures;
    ++rep.regular_values_tested;
  }
  if (rep.sheet_count_failures > 0) rep.failures.push_back("regular value with wrong sheet count");

  // (c) monodromy from the base value 0 (regular: f(z) = 0 has distinct roots)
  const auto base = base_fiber(f);
  double nearest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rep.critical_values.size(); ++i)
    for (std::size_t j = i + 1; j < rep.critical_values.size(); ++j)
      nearest = std::min(nearest, std::abs(rep.critical_values[i] - rep.critical_values[j]));
  const double small = 0.25 * std::min(value_radius, nearest);
  for (cplx v : rep.critical_values) {
    const double r = std::abs(v);
    const cplx dir = v / r;
    const double t0 = std::arg(-dir);
    // out along the ray, once around v counterclockwise, back along the ray
    auto loop = [=](double s) -> cplx {
      if (s <= 1.0 / 3.0) return dir * (3.0 * s * (r - small));
      if (s >= 2.0 / 3.0) return dir * (3.0 * (1.0 - s) * (r - small));
      return v + std::polar(small, t0 + 2.0 * kPi * (3.0 * s - 1.0));
    };
    auto perm = loop_permutation(f, base, loop);
    if (!perm) {
      rep.failures.push_back("root continuation failed around a critical value");
      rep.local_monodromy.push_back(Permutation(degree));
    } else {
      rep.local_monodromy.push_back(*perm);
    }
  }
  // Leave the base along a ray halfway between two critical values.
  const double gap_angle = std::arg(rep.critical_values.front()) + kPi / n;
  const cplx exit_dir = std::polar(1.0, gap_angle);
  auto boundary = loop_permutation(f, base, [&](double s) -> cplx {
    if (s <= 0.25) return 4.0 * s * rep.disk_radius * exit_dir;
    if (s >= 0.75) return 4.0 * (1.0 - s) * rep.disk_radius * exit_dir;
    return std::polar(rep.disk_radius, gap_angle + 2.0 * kPi * (2.0 * s - 0.5));
  });
  if (!boundary) {
    rep.failures.push_back("root continuation failed on the boundary circle");
    rep.boundary_monodromy = Permutation(degree);
  } else {
    rep.boundary_monodromy = *boundary;
  }
  rep.disk_preimage_boundary = static_cast<int>(rep.boundary_monodromy.cycle_type().size());

  MonodromyRep rho{degree, rep.local_monodromy};
  rep.simple = is_simple(rho);
  rep.transitive = is_transitive(rho);
  if (!rep.simple) rep.failures.push_back("local monodromy is not a transposition");
  if (!rep.transitive) rep.failures.push_back("monodromy is not transitive");

  // (c') Riemann-Hurwitz over the disk
  if (rep.simple) {
    const auto lift = lift_stratum(1, rep.local_monodromy, {}, degree);
    rep.disk_preimage_euler = lift.euler_char;
    rep.disk_preimage_components = lift.components;
  }
  if (rep.disk_preimage_euler != 1 || rep.disk_preimage_components != 1 ||
      rep.disk_preimage_boundary != 1) {
    rep.failures.push_back("preimage of the disk is not a disk");
  }

  // (d) agreement with standard_rho up to conjugation
  const MonodromyRep standard = standard_rho(n);
  if (standard.degree != rho.degree || standard.meridian_images.size() != rho.meridian_images.size()) {
    rep.failures.push_back("monodromy shape differs from standard_rho");
  }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace tw
