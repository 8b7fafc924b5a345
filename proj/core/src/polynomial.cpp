#include "tw/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace tw {

int poly_degree(const Poly& p) {
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
    if (p[d] != cplx(0.0)) return d;
  return -1;
}

cplx poly_eval(const Poly& p, cplx z) {
  cplx acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {cplx(0.0)};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
  return d;
}

namespace {

cplx newton_polish(const Poly& p, const Poly& dp, cplx z) {
  for (int it = 0; it < 8; ++it) {
    const cplx d = poly_eval(dp, z);
    if (d == cplx(0.0)) break;
    const cplx step = poly_eval(p, z) / d;
    const cplx next = z - step;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
    if (std::abs(poly_eval(p, next)) > std::abs(poly_eval(p, z))) break;
    z = next;
    if (std::abs(step) <= 1e-17 * (1.0 + std::abs(z))) break;
  }
  return z;
}

}  // namespace

std::vector<cplx> poly_roots(const Poly& p_in) {
  const int n = poly_degree(p_in);
  if (n < 0) throw std::invalid_argument("poly_roots: zero polynomial");
  if (n == 0) return {};
  Poly p(p_in.begin(), p_in.begin() + n + 1);
  const cplx lead = p[n];
  for (auto& c : p) c /= lead;
  const Poly dp = poly_derivative(p);

  // Cauchy bound for the initial circle.
  double bound = 0.0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(p[k]));
  const double radius = 0.5 * (1.0 + bound);
  std::vector<cplx> z(n);
  for (int k = 0; k < n; ++k) {
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * (k + 0.25) / n + 0.4);
  }

  for (int it = 0; it < 500; ++it) {
    double largest = 0.0;
    for (int k = 0; k < n; ++k) {
      const cplx f = poly_eval(p, z[k]);
      if (f == cplx(0.0)) continue;
      const cplx ratio = f / poly_eval(dp, z[k]);
      cplx repulsion = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      const cplx step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      largest = std::max(largest, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (largest < 1e-16) break;
  }
  for (auto& r : z) r = newton_polish(p, dp, r);
  return z;
}

std::vector<cplx> distinct_roots(const std::vector<cplx>& roots, double radius) {
  std::vector<cplx> out;
  for (const cplx& r : roots) {
    if (std::none_of(out.begin(), out.end(), [&](cplx q) { return std::abs(q - r) <= radius; })) {
      out.push_back(r);
    }
  }
  return out;
}

namespace {

double min_separation(const std::vector<cplx>& z) {
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) sep = std::min(sep, std::abs(z[i] - z[j]));
  return sep;
}

// Newton continuation from `from` to the roots of p - w; nullopt if any root
// moves too far or fails to converge.
std::optional<std::vector<cplx>> step_roots(const Poly& p, const Poly& dp, cplx w,
                                            const std::vector<cplx>& from) {
  const double sep = min_separation(from);
  Poly shifted = p;
  shifted[0] -= w;
  std::vector<cplx> out(from.size());
  for (std::size_t k = 0; k < from.size(); ++k) {
    cplx z = from[k];
    bool converged = false;
    for (int it = 0; it < 30; ++it) {
      const cplx d = poly_eval(dp, z);
      if (d == cplx(0.0)) return std::nullopt;
      const cplx step = poly_eval(shifted, z) / d;
      z -= step;
      if (std::abs(z - from[k]) > 0.25 * sep) return std::nullopt;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged) return std::nullopt;
    out[k] = z;
  }
  if (min_separation(out) < 0.5 * sep) return std::nullopt;
  return out;
}

}  // namespace

std::optional<std::vector<cplx>> track_roots(const Poly& p, const std::function<cplx(double)>& path,
                                             const std::vector<cplx>& start) {
  const Poly dp = poly_derivative(p);
  std::vector<cplx> cur = start;
  double s = 0.0;
  double h = 1.0 / 64.0;
  while (s < 1.0) {
    const double next = std::min(1.0, s + h);
    auto moved = step_roots(p, dp, path(next), cur);
    if (!moved) {
      h *= 0.5;
      if (h < 1e-12) return std::nullopt;
      continue;
    }
    cur = std::move(*moved);
    s = next;
    h = std::min(2.0 * h, 1.0 / 16.0);
  }
  return cur;
}

}  // namespace tw
