#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tw/cover.hpp"
#include "tw/permutation.hpp"
#include "tw/polynomial.hpp"

namespace tw {

/// f(x) = x^{n+1} - eps (n+1) x.
Poly model_polynomial(int n, double epsilon);

struct PolyCoverReport {
  int n = 0;
  double epsilon = 0;
  std::vector<cplx> critical_points;     // roots of f', ordered by argument
  double critical_point_error = 0;       // max distance to the n-th roots of eps
  std::vector<cplx> critical_values;
  double disk_radius = 0;                // disk containing every critical value
  int regular_values_tested = 0;
  int sheet_count_failures = 0;
  std::vector<Permutation> local_monodromy;  // one loop per critical value
  Permutation boundary_monodromy;
  bool simple = false;
  bool transitive = false;
  int disk_preimage_euler = 0;
  int disk_preimage_components = 0;
  int disk_preimage_boundary = 0;
  bool ok = false;
  std::vector<std::string> failures;
};

/// Critical points, sheet counts over random regular values, local monodromy
/// by root continuation from the base value 0, and the Riemann-Hurwitz count
/// for the preimage of a disk containing all critical values.
PolyCoverReport polynomial_cover_check(int n, double epsilon, int regular_values = 100,
                                       std::uint64_t seed = 1, double tol = 1e-10);

}  // namespace tw
