#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace tw {

using cplx = std::complex<double>;

/// Coefficients in increasing degree: c[0] + c[1] z + ...
using Poly = std::vector<cplx>;

cplx poly_eval(const Poly& p, cplx z);
Poly poly_derivative(const Poly& p);
int poly_degree(const Poly& p);

/// All complex roots with multiplicity (Aberth iteration, Newton polish).
std::vector<cplx> poly_roots(const Poly& p);

/// Roots grouped within `radius` of each other; one representative each.
std::vector<cplx> distinct_roots(const std::vector<cplx>& roots, double radius);

/// Continues the roots of p(z) - w along w = path(s), s in [0, 1], starting
/// from `start` (roots at path(0)). Steps are halved until every root moves
/// less than a quarter of the current minimum root separation. Returns the
/// roots at path(1) in the order of `start`, or nullopt if the path runs
/// through a critical value.
std::optional<std::vector<cplx>> track_roots(const Poly& p, const std::function<cplx(double)>& path,
                                             const std::vector<cplx>& start);

}  // namespace tw
