#include "tw/psh.hpp"

#include <cmath>
#include <bit>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tw {

PointC2 ComplexLine::at(cplx zeta) const {
  return base + PointC2::from_complex(zeta * dir[0], zeta * dir[1]);
}

double circle_average(const ScalarFieldC2& psi, const ComplexLine& line, cplx center,
                      double radius, int m) {
  if (!(radius > 0.0)) throw std::invalid_argument("circle_average: radius must be positive");
  if (m < 1) throw std::invalid_argument("circle_average: no samples");
  double sum = 0.0;
  for (int j = 0; j < m; ++j) {
    sum += psi(line.at(center + std::polar(radius, 2.0 * std::numbers::pi * j / m)));
  }
  return sum / m;
}

bool subharmonicity_check(const ScalarFieldC2& psi, const ComplexLine& line, cplx center,
                          double radius, int m_samples, double tol) {
  if (m_samples < 64) throw std::invalid_argument("subharmonicity_check: m_samples must be >= 64");
  return circle_average(psi, line, center, radius, m_samples) >= psi(line.at(center)) - tol;
}

PointC2 sample_qm(const PolyhedronQM& q, std::mt19937_64& rng) {
  const double r = 1.0 / q.M();
  std::uniform_real_distribution<double> ux(-r, r), uy(-q.M(), q.M());
  PointC2 p;
  p.x1 = ux(rng);
  p.y1 = uy(rng);
  p.x2 = ux(rng);
  p.y2 = uy(rng);
  return p;
}

std::array<cplx, 2> random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  cplx a(g(rng), g(rng)), b(g(rng), g(rng));
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  return {a / norm, b / norm};
}

SectorCoverageReport sector_coverage(const PolyhedronQM& q, long samples, std::uint64_t seed,
                                     double tol) {
  SectorCoverageReport rep;
  std::mt19937_64 rng(seed);
  for (long i = 0; i < samples; ++i) {
    const PointC2 p = sample_qm(q, rng);
    ++rep.samples;
    const unsigned closed = containing_sectors(p, 0.0);
    if (closed == 0u) {
      ++rep.unlabeled;
      continue;
    }
    bool banded = false;
    for (Sector s = 1; s <= 3; ++s) banded = banded || std::abs(phi(s, p)) <= tol;
    if (banded) {
      ++rep.in_band;
      continue;
    }
    int open = 0;
    Sector which = 0;
    for (Sector s = 1; s <= 3; ++s) {
      if (sector_defect(s, p.x1, p.x2) < 0.0) {
        ++open;
        which = s;
      }
    }
    if (open != 1) ++rep.open_label_errors;
    if (std::popcount(closed) != 1) ++rep.closed_label_errors;
    if (open == 1) ++rep.per_sector[which - 1];
  }
  rep.ok = rep.unlabeled == 0 && rep.open_label_errors == 0 && rep.closed_label_errors == 0;
  return rep;
}

}  // namespace tw
