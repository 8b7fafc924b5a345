#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tw {

enum class CuspRegion { Interior, Exterior, Fold, CuspPoint };
std::string to_string(CuspRegion r);

/// 4y^3 - 27x^2, the discriminant of z^3 - yz - x.
double cusp_discriminant(double x, double y);

/// Sign of the discriminant with a relative band of width tol; samples in the
/// band are Fold (or CuspPoint near the origin).
CuspRegion classify_cusp(double x, double y, double tol);

/// Expected number of distinct real roots of z^3 - yz - x in each region.
int expected_fiber_count(CuspRegion r);

/// Distinct real roots of z^3 - yz - x.
int real_fiber_count(double x, double y);

struct CuspSample {
  double x = 0, y = 0;
  bool on_fold = false;  // drawn from the fold parametrization
};

struct CuspRegionStats {
  int samples = 0;
  std::map<int, int> fiber_counts;  // count -> occurrences
  int misclassified = 0;
};

struct CuspReport {
  std::array<CuspRegionStats, 4> regions;  // indexed by CuspRegion
  int skipped_in_band = 0;  // off-fold samples that landed in the tolerance band
  int misclassified = 0;
  double fold_max_discriminant = 0;  // |4y^3 - 27x^2| over the sampled fold
  double tol = 0;
  bool ok = false;
};

/// Uniform samples of [-2, 2] x [-1, 3] with every fifth sample taken on the
/// fold (x, y) = (-2t^3, 3t^2), t != 0.
std::vector<CuspSample> cusp_default_samples(int count, std::uint64_t seed);

CuspReport cusp_analysis(const std::vector<CuspSample>& samples, double tol = 1e-9);

}  // namespace tw
