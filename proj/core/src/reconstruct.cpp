#include "tw/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tw {

ReducibleTrisection make_reducible(const TrisectionParams& a, const TrisectionParams& b) {
  for (const auto* p : {&a, &b}) {
    const auto rep = validate_params(*p);
    if (!rep.valid()) {
      throw std::invalid_argument("make_reducible: " + to_string(*p) + ": " + rep.violations.front());
    }
  }
  ReducibleTrisection r;
  r.params = connected_sum(a, b);
  r.delta.assign(static_cast<std::size_t>(2 * r.params.genus), 0);
  r.summand_params = {a, b};
  return r;
}

bool reducibility_necessary(const TrisectionDiagram& d, const HomologyClass& delta) {
  if (delta.size() != static_cast<std::size_t>(2 * d.genus)) {
    throw std::invalid_argument("reducibility_necessary: class length " +
                                std::to_string(delta.size()) + " does not match genus " +
                                std::to_string(d.genus));
  }
  if (std::all_of(delta.begin(), delta.end(), [](std::int64_t v) { return v == 0; })) return true;
  for (const auto& cs : d.cut_systems) {
    if (cs.empty()) return false;
    // columns are the curves
    IntMatrix a(delta.size(), cs.size());
    for (std::size_t c = 0; c < cs.size(); ++c)
      for (std::size_t r = 0; r < delta.size(); ++r) a(r, c) = cs[c].at(r);
    if (!solve_integer(a, delta)) return false;
  }
  return true;
}

ValidationReport validate_splitting(const SplittingData& s, const TrisectionParams& p) {
  ValidationReport rep;
  for (int l = 0; l < 3; ++l) {
    const std::string tag = "j" + std::to_string(l + 1);
    if (s.j[l][0] < 0 || s.j[l][1] < 0) rep.violations.push_back(tag + " negative");
    if (s.j[l][0] + s.j[l][1] != p.k[l]) {
      rep.violations.push_back(tag + " parts do not sum to k" + std::to_string(l + 1));
    }
  }
  return rep;
}

SplittingData complement(const SplittingData& s) {
  SplittingData out;
  for (int l = 0; l < 3; ++l) out.j[l] = {s.j[l][1], s.j[l][0]};
  return out;
}

SplittingData trivial_splitting(const TrisectionParams& p) {
  SplittingData s;
  for (int l = 0; l < 3; ++l) s.j[l] = {p.k[l], 0};
  return s;
}

ReconstructionResult reconstruct_Z(const ReducibleTrisection& r, const SplittingData& s,
                                   const RelTrisectionParams& rel_base,
                                   const SpineEncoding& b_spine,
                                   const std::optional<SpineEncoding>& z_spine) {
  const auto split = validate_splitting(s, r.params);
  if (!split.valid()) {
    throw std::invalid_argument("reconstruct_Z: inconsistent splitting: " + split.violations.front());
  }
  const auto base = validate_params(rel_base);
  if (!base.valid()) {
    throw std::invalid_argument("reconstruct_Z: base " + to_string(rel_base) + ": " +
                                base.violations.front());
  }
  ReconstructionResult out;
  out.z_sector_ranks = s.second();
  out.z_params = rel_base;
  out.z_params.k = out.z_sector_ranks;
  const auto z = validate_params(out.z_params);
  if (!z.valid()) {
    throw std::invalid_argument("reconstruct_Z: " + to_string(out.z_params) + " is not realizable: " +
                                z.violations.front());
  }
  if (z_spine) out.spine = *z_spine;
  out.verdict = (z_spine && spine_equal(*z_spine, b_spine)) ? "diffeomorphic-by-spine"
                                                             : "indeterminate";
  return out;
}

// ---------------------------------------------------------------------------

ShilovGlue qm_model_glue(double shrink, double band) {
  if (!(shrink >= 0.0)) throw std::invalid_argument("qm_model_glue: shrink must be non-negative");
  ShilovGlue g;
  g.band = band;
  for (Sector s = 1; s <= 3; ++s) {
    g.G[s - 1] = [s, shrink](const PointC2& p) {
      return std::max({phi(s, p) + shrink, -phi(prev_sector(s), p) + shrink, 0.0});
    };
  }
  return g;
}

double shilov_glue_eval(const ShilovGlue& glue, const PointC2& p) {
  unsigned mask = containing_sectors(p, glue.band);
  if (std::abs(p.x1) <= glue.band && std::abs(p.x2) <= glue.band) mask = 7u;
  if (mask == 0u) throw std::logic_error("shilov_glue_eval: point in no sector");
  double value = -std::numeric_limits<double>::infinity();
  for (Sector s = 1; s <= 3; ++s) {
    if (!(mask & (1u << (s - 1)))) continue;
    const double v = glue.G[s - 1](p);
    if (v < 0.0) throw std::domain_error("shilov_glue_eval: sector function is negative");
    value = std::max(value, v);
  }
  return value;
}

namespace {

// Open sector holding p beyond the band, or 0.
Sector open_sector(const PointC2& p, double band) {
  for (Sector s = 1; s <= 3; ++s)
    if (sector_defect(s, p.x1, p.x2) < -band) return s;
  return 0;
}

}  // namespace

GlueSurvey glue_subharmonicity_survey(const ShilovGlue& glue, const PolyhedronQM& q, int circles,
                                      std::uint64_t seed, int m, double tol) {
  GlueSurvey out;
  out.worst_gap = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const ScalarFieldC2 psi = [&glue](const PointC2& p) { return shilov_glue_eval(glue, p); };
  const long max_attempts = 1000L * std::max(circles, 1);
  for (long attempt = 0; out.circles < circles && attempt < max_attempts; ++attempt) {
    ComplexLine line{sample_qm(q, rng), random_direction(rng)};
    const double radius = (0.5 / q.M()) * (0.05 + 0.95 * unit(rng));
    const Sector home = open_sector(line.base, glue.band);
    bool usable = home != 0;
    for (int j = 0; usable && j < m; ++j) {
      const PointC2 p = line.at(std::polar(radius, 2.0 * std::numbers::pi * j / m));
      usable = q.membership(p).inside && open_sector(p, glue.band) == home;
    }
    if (!usable) {
      ++out.rejected;
      continue;
    }
    ++out.circles;
    const double gap = circle_average(psi, line, 0.0, radius, m) - psi(line.base);
    out.worst_gap = std::min(out.worst_gap, gap);
    if (!subharmonicity_check(psi, line, 0.0, radius, m, tol)) ++out.failures;
  }
  if (out.circles < circles) ++out.failures;
  return out;
}

}  // namespace tw
