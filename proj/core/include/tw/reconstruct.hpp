#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "tw/psh.hpp"
#include "tw/trisection.hpp"

namespace tw {

struct ReducibleTrisection {
  TrisectionParams params;
  HomologyClass delta;  // zero: the reducing curve separates
  std::pair<TrisectionParams, TrisectionParams> summand_params;
};

/// Connected sum of two trisections, reducible along the summing sphere.
ReducibleTrisection make_reducible(const TrisectionParams& a, const TrisectionParams& b);

/// True iff delta lies in the integer span of every cut system. Necessary for
/// delta to bound a disk in each handlebody, not sufficient.
bool reducibility_necessary(const TrisectionDiagram& d, const HomologyClass& delta);

/// j[s-1] = {j1, j2} with j1 + j2 = k_s.
struct SplittingData {
  std::array<std::array<int, 2>, 3> j{};
  Triple first() const { return {j[0][0], j[1][0], j[2][0]}; }
  Triple second() const { return {j[0][1], j[1][1], j[2][1]}; }
  friend bool operator==(const SplittingData&, const SplittingData&) = default;
};

ValidationReport validate_splitting(const SplittingData& s, const TrisectionParams& p);

/// Swaps the roles of the two sides.
SplittingData complement(const SplittingData& s);

/// Splittings with j2 = 0.
SplittingData trivial_splitting(const TrisectionParams& p);

struct ReconstructionResult {
  RelTrisectionParams z_params;
  Triple z_sector_ranks{0, 0, 0};
  SpineEncoding spine;
  std::string verdict;  // "diffeomorphic-by-spine" or "indeterminate"
};

/// Z inherits genus, page and boundary from rel_base and takes j2 as its
/// sector ranks. The verdict compares the spine of Z (if known) with the
/// spine of the B side; differing or missing spines give "indeterminate".
ReconstructionResult reconstruct_Z(const ReducibleTrisection& r, const SplittingData& s,
                                   const RelTrisectionParams& rel_base,
                                   const SpineEncoding& b_spine,
                                   const std::optional<SpineEncoding>& z_spine = std::nullopt);

// ---------------------------------------------------------------------------

struct ShilovGlue {
  std::array<ScalarFieldC2, 3> G;
  double band = 1e-7;  // classifier band
};

/// G_s = max(phi_s + a, -phi_{s-1} + a, 0) on Q_M; a = 0 is the unshrunk model.
ShilovGlue qm_model_glue(double shrink = 0.0, double band = 1e-7);

/// max over the strata containing p: all three on Sigma, the two adjacent
/// sectors on a handlebody, G_s inside Z_s. Points in the band of several
/// strata take the max over all candidates.
double shilov_glue_eval(const ShilovGlue& glue, const PointC2& p);

struct GlueSurvey {
  int circles = 0;
  int failures = 0;
  int rejected = 0;  // candidate circles meeting the band or leaving Q_M
  double worst_gap = 0;  // min of (average - centre value)
};

/// Random circles on complex lines through Q_M that stay inside one open
/// sector beyond the classifier band.
GlueSurvey glue_subharmonicity_survey(const ShilovGlue& glue, const PolyhedronQM& q, int circles,
                                      std::uint64_t seed, int m = 128, double tol = 1e-12);

}  // namespace tw
