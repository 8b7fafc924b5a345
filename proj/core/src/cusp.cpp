#include "tw/cusp.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tw/polynomial.hpp"

namespace tw {

std::string to_string(CuspRegion r) {
  switch (r) {
    case CuspRegion::Interior: return "interior";
    case CuspRegion::Exterior: return "exterior";
    case CuspRegion::Fold: return "fold";
    case CuspRegion::CuspPoint: return "cusp";
  }
  return "?";
}

double cusp_discriminant(double x, double y) { return 4.0 * y * y * y - 27.0 * x * x; }

CuspRegion classify_cusp(double x, double y, double tol) {
  if (std::abs(x) <= tol && std::abs(y) <= tol) return CuspRegion::CuspPoint;
  const double d = cusp_discriminant(x, y);
  const double scale = 4.0 * std::abs(y * y * y) + 27.0 * x * x;
  if (std::abs(d) <= tol * scale) return CuspRegion::Fold;
  return d > 0 ? CuspRegion::Interior : CuspRegion::Exterior;
}

int expected_fiber_count(CuspRegion r) {
  switch (r) {
    case CuspRegion::Interior: return 3;
    case CuspRegion::Exterior: return 1;
    case CuspRegion::Fold: return 2;
    case CuspRegion::CuspPoint: return 1;
  }
  return 0;
}

int real_fiber_count(double x, double y) {
  const auto roots = poly_roots(Poly{-x, -y, 0.0, 1.0});
  const double scale = 1.0 + std::sqrt(std::abs(y)) + std::cbrt(std::abs(x));
  // A double root splits by about sqrt(machine eps) under rounding.
  const double merge = 1e-5 * scale;
  std::vector<cplx> real;
  for (cplx r : roots)
    if (std::abs(r.imag()) <= merge) real.emplace_back(r.real(), 0.0);
  return static_cast<int>(distinct_roots(real, merge).size());
}

std::vector<CuspSample> cusp_default_samples(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(-1.0, 3.0), ut(0.05, 1.0);
  std::bernoulli_distribution sign(0.5);
  std::vector<CuspSample> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    if (i % 5 == 4) {
      const double t = sign(rng) ? ut(rng) : -ut(rng);
      out.push_back({-2.0 * t * t * t, 3.0 * t * t, true});
    } else {
      out.push_back({ux(rng), uy(rng), false});
    }
  }
  return out;
}

CuspReport cusp_analysis(const std::vector<CuspSample>& samples, double tol) {
  CuspReport rep;
  rep.tol = tol;
  for (const auto& s : samples) {
    const CuspRegion region = classify_cusp(s.x, s.y, tol);
    if (s.on_fold) {
      rep.fold_max_discriminant = std::max(rep.fold_max_discriminant,
                                           std::abs(cusp_discriminant(s.x, s.y)));
    }
    if (region == CuspRegion::Fold && !s.on_fold) {
      ++rep.skipped_in_band;
      continue;
    }
    auto& stats = rep.regions[static_cast<int>(region)];
    const int count = real_fiber_count(s.x, s.y);
    ++stats.samples;
    ++stats.fiber_counts[count];
    // A fold sample must be classified as fold; anything else is an error.
    if (count != expected_fiber_count(region) || (s.on_fold && region != CuspRegion::Fold)) {
      ++stats.misclassified;
      ++rep.misclassified;
    }
  }
  rep.ok = rep.misclassified == 0;
  return rep;
}

}  // namespace tw
