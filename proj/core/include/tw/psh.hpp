#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>

#include "tw/geometry.hpp"

namespace tw {

using ScalarFieldC2 = std::function<double(const PointC2&)>;

/// {base + zeta dir : zeta in C}.
struct ComplexLine {
  PointC2 base;
  std::array<cplx, 2> dir{cplx(1.0), cplx(0.0)};
  PointC2 at(cplx zeta) const;
};

/// Mean of psi over m equally spaced points of the circle |zeta - center| = radius.
double circle_average(const ScalarFieldC2& psi, const ComplexLine& line, cplx center,
                      double radius, int m);

/// Sub-mean-value property on one circle: average >= psi(center) - tol.
bool subharmonicity_check(const ScalarFieldC2& psi, const ComplexLine& line, cplx center,
                          double radius, int m_samples, double tol);

struct SectorCoverageReport {
  long samples = 0;
  long unlabeled = 0;          // in no closed sector
  long in_band = 0;            // some |phi| <= tol; may lie on a shared face
  long open_label_errors = 0;  // off the band but not in exactly one open sector
  long closed_label_errors = 0;  // off the band but in more than one closed sector
  std::array<long, 3> per_sector{0, 0, 0};
  bool ok = false;
};

/// Uniform samples of Q_M, checked against the closed and open sectors.
SectorCoverageReport sector_coverage(const PolyhedronQM& q, long samples, std::uint64_t seed,
                                     double tol);

/// Uniform point of Q_M.
PointC2 sample_qm(const PolyhedronQM& q, std::mt19937_64& rng);

/// Random unit direction in C^2.
std::array<cplx, 2> random_direction(std::mt19937_64& rng);

}  // namespace tw
