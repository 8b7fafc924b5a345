#include "tw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace tw {

namespace {
constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kSeedGrid = 32;
constexpr int kNewtonIterations = 60;
}  // namespace

bool PointC2::finite() const {
  return std::isfinite(x1) && std::isfinite(y1) && std::isfinite(x2) && std::isfinite(y2);
}

double distance(const PointC2& a, const PointC2& b) {
  const double d[4] = {a.x1 - b.x1, a.y1 - b.y1, a.x2 - b.x2, a.y2 - b.y2};
  return std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3]);
}

PolyhedronQM::PolyhedronQM(double M) : M_(M) {
  if (!(M > 1.0) || !std::isfinite(M)) throw std::invalid_argument("Q_M requires M > 1");
}

PolyhedronQM::Membership PolyhedronQM::membership(const PointC2& p) const {
  const double r = 1.0 / M_;
  const double margin = std::min({r - std::abs(p.x1), r - std::abs(p.x2), M_ - std::abs(p.y1),
                                  M_ - std::abs(p.y2)});
  return {margin >= 0.0, margin};
}

std::array<double, 8> PolyhedronQM::defining_moduli(const PointC2& p) const {
  const double r = 1.0 / M_;
  const cplx i(0.0, 1.0);
  std::array<double, 8> out{};
  const cplx z[2] = {p.z1(), p.z2()};
  for (int j = 0; j < 2; ++j) {
    out[4 * j + 0] = std::abs(std::exp(z[j] - r));
    out[4 * j + 1] = std::abs(std::exp(-z[j] - r));
    out[4 * j + 2] = std::abs(std::exp(-i * z[j] - M_));
    out[4 * j + 3] = std::abs(std::exp(i * z[j] - M_));
  }
  return out;
}

double phi(Sector s, double x1, double x2) {
  switch (s) {
    case 1: return x2;
    case 2: return -kSqrt3 * x1 - x2;
    case 3: return kSqrt3 * x1 - x2;
    default: throw std::invalid_argument("phi: sector index must be 1, 2 or 3");
  }
}

double sector_defect(Sector s, double x1, double x2) {
  return std::max(phi(s, x1, x2), -phi(prev_sector(s), x1, x2));
}

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::Z1: return "Z1";
    case Stratum::Z2: return "Z2";
    case Stratum::Z3: return "Z3";
    case Stratum::H1: return "H1";
    case Stratum::H2: return "H2";
    case Stratum::H3: return "H3";
    case Stratum::Sigma: return "Sigma";
  }
  return "?";
}

unsigned containing_sectors(const PointC2& p, double tol) {
  unsigned mask = 0;
  for (Sector s = 1; s <= 3; ++s) {
    if (sector_defect(s, p.x1, p.x2) <= tol) mask |= 1u << (s - 1);
  }
  return mask;
}

Stratum sector_of(const PointC2& p, double tol) {
  if (std::abs(p.x1) <= tol && std::abs(p.x2) <= tol) return Stratum::Sigma;
  unsigned mask = containing_sectors(p, tol);
  if (mask == 7u) {
    // Only possible in a sliver next to the Sigma box: keep the two sectors
    // the point is deepest in.
    Sector worst = 1;
    for (Sector s = 2; s <= 3; ++s)
      if (sector_defect(s, p.x1, p.x2) > sector_defect(worst, p.x1, p.x2)) worst = s;
    mask &= ~(1u << (worst - 1));
  }
  switch (mask) {
    case 1u: return Stratum::Z1;
    case 2u: return Stratum::Z2;
    case 4u: return Stratum::Z3;
    case 3u: return Stratum::H2;  // Z1 cap Z2
    case 6u: return Stratum::H3;  // Z2 cap Z3
    case 5u: return Stratum::H1;  // Z3 cap Z1
    default: break;
  }
  throw std::logic_error("sector_of: sectors do not cover the point");
}

// ---------------------------------------------------------------------------

namespace {

cplx profile(const GraphSurface& g, cplx z) {
  const cplx i(0.0, 1.0);
  if (g.kind == GraphKind::Linear) return -i * g.epsilon * z;
  return i * g.epsilon * (z * z * z - z);
}

cplx profile_derivative(const GraphSurface& g, cplx z) {
  const cplx i(0.0, 1.0);
  if (g.kind == GraphKind::Linear) return -i * g.epsilon;
  return i * g.epsilon * (3.0 * z * z - 1.0);
}

PointC2 evaluate(const GraphSurface& g, double x, double y) {
  const cplx z(x, y);
  const cplx u1 = profile(g, z);
  const double c = std::cos(g.theta);
  const double s = std::sin(g.theta);
  const cplx w1 = c * u1 + s * z + cplx(g.translation[0], g.translation[1]);
  const cplx w2 = -s * u1 + c * z + cplx(g.translation[2], g.translation[3]);
  return PointC2::from_complex(w1, w2);
}

double domain_slack(const GraphSurface& g) { return 1e-12 * g.domain.diameter(); }

}  // namespace

PointC2 graph_point(const GraphSurface& g, double x, double y) {
  if (!g.domain.contains(x, y, domain_slack(g))) {
    throw std::invalid_argument("graph_point: parameter outside the graph's domain");
  }
  return evaluate(g, x, y);
}

std::array<cplx, 2> graph_derivative(const GraphSurface& g, cplx z) {
  const cplx d1 = profile_derivative(g, z);
  const double c = std::cos(g.theta);
  const double s = std::sin(g.theta);
  return {c * d1 + s, -s * d1 + c};
}

namespace {

struct RealSystem {
  double f[2];
  double jac[2][2];
};

RealSystem real_constraints(const GraphSurface& g, double x, double y) {
  const PointC2 p = evaluate(g, x, y);
  const auto d = graph_derivative(g, cplx(x, y));
  RealSystem r{};
  r.f[0] = p.x1;
  r.f[1] = p.x2;
  // d Re w / dx = Re w', d Re w / dy = Re(i w') = -Im w'
  r.jac[0][0] = d[0].real();
  r.jac[0][1] = -d[0].imag();
  r.jac[1][0] = d[1].real();
  r.jac[1][1] = -d[1].imag();
  return r;
}

double determinant(const RealSystem& r) {
  return r.jac[0][0] * r.jac[1][1] - r.jac[0][1] * r.jac[1][0];
}

}  // namespace

BridgePointSearch bridge_points(const GraphSurface& g, const PolyhedronQM& q, double tol,
                                bool clip_to_qm) {
  BridgePointSearch out;
  const Rect& dom = g.domain;
  out.dedup_radius = 1e-6 * dom.diameter();
  const double far = dom.diameter();

  for (int sj = 0; sj < kSeedGrid; ++sj)
    for (int si = 0; si < kSeedGrid; ++si) {
      ++out.seeds;
      double x = dom.xmin + dom.width() * (si + 0.5) / kSeedGrid;
      double y = dom.ymin + dom.height() * (sj + 0.5) / kSeedGrid;
      bool converged = false;
      for (int it = 0; it < kNewtonIterations; ++it) {
        const RealSystem r = real_constraints(g, x, y);
        const double det = determinant(r);
        if (det == 0.0 || !std::isfinite(det)) break;
        const double dx = -(r.jac[1][1] * r.f[0] - r.jac[0][1] * r.f[1]) / det;
        const double dy = -(-r.jac[1][0] * r.f[0] + r.jac[0][0] * r.f[1]) / det;
        x += dx;
        y += dy;
        if (!std::isfinite(x) || !std::isfinite(y) || !dom.contains(x, y, far)) break;
        if (std::hypot(dx, dy) <= 1e-15 * (1.0 + std::hypot(x, y))) {
          converged = true;
          break;
        }
      }
      const RealSystem r = real_constraints(g, x, y);
      const double residual = std::max(std::abs(r.f[0]), std::abs(r.f[1]));
      if (!std::isfinite(residual) || residual >= tol) converged = false;
      else converged = true;
      if (!converged) {
        ++out.unconverged_seeds;
        continue;
      }
      if (!dom.contains(x, y, domain_slack(g))) continue;  // root outside the domain

      const bool duplicate = std::any_of(out.points.begin(), out.points.end(), [&](const BridgePoint& b) {
        return std::hypot(b.x - x, b.y - y) <= out.dedup_radius;
      });
      if (duplicate) continue;

      BridgePoint bp;
      bp.x = x;
      bp.y = y;
      bp.point = evaluate(g, x, y);
      bp.residual = residual;
      bp.transversality = std::abs(determinant(r));
      bp.in_qm = q.membership(bp.point).margin >= -tol;
      if (clip_to_qm && !bp.in_qm) continue;
      out.points.push_back(bp);
    }
  std::sort(out.points.begin(), out.points.end(), [](const BridgePoint& a, const BridgePoint& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  return out;
}

namespace {

std::function<bool(double, double)> qm_mask(const GraphSurface& g, const PolyhedronQM& q,
                                            bool clip) {
  if (!clip) return nullptr;
  return [&g, &q](double x, double y) {
    return q.membership(evaluate(g, x, y)).margin >= -1e-12;
  };
}

}  // namespace

TangleTrace tangle_trace(const GraphSurface& g, Sector s, const PolyhedronQM& q, int grid_n,
                         bool clip_to_qm) {
  require_sector(s);
  if (grid_n < 64) throw std::invalid_argument("tangle_trace: grid_n must be at least 64");
  const auto grid = sample_grid(
      g.domain, grid_n, grid_n,
      [&](double x, double y) { return phi(s, evaluate(g, x, y)); }, qm_mask(g, q, clip_to_qm));
  const LevelSet level = trace_zero_level(grid);

  TangleTrace out;
  out.polylines = level.polylines;
  out.level_components = level.components();
  out.ambiguous_cells = level.ambiguous_cells;
  out.grid_too_coarse = level.ambiguous_cells > 0;

  // On {phi_s = 0}, Z_s cap Z_{s+1} is the half where phi_{s-1} >= 0.
  const Sector before = prev_sector(s);
  for (const auto& pl : level.polylines) {
    auto pieces = split_where_positive(pl, [&](double x, double y) {
      return phi(before, evaluate(g, x, y));
    });
    for (auto& p : pieces) out.arcs.push_back(std::move(p));
  }
  out.handlebody_arcs = static_cast<int>(out.arcs.size());
  return out;
}

Triple patch_counts(const GraphSurface& g, const PolyhedronQM& q, int grid_n, double band,
                    bool clip_to_qm) {
  if (grid_n < 2) throw std::invalid_argument("patch_counts: grid too small");
  const int w = grid_n + 1;
  std::vector<int> labels(static_cast<std::size_t>(w) * w, 0);
  const auto mask = qm_mask(g, q, clip_to_qm);
  const Rect& d = g.domain;
  for (int j = 0; j <= grid_n; ++j)
    for (int i = 0; i <= grid_n; ++i) {
      const double x = d.xmin + d.width() * i / grid_n;
      const double y = d.ymin + d.height() * j / grid_n;
      if (mask && !mask(x, y)) continue;
      const PointC2 p = evaluate(g, x, y);
      for (Sector s = 1; s <= 3; ++s) {
        if (phi(s, p) < -band && phi(prev_sector(s), p) > band) {
          labels[static_cast<std::size_t>(j) * w + i] = s;
          break;
        }
      }
    }
  Triple out{};
  for (Sector s = 1; s <= 3; ++s) out[s - 1] = count_regions(grid_n, grid_n, labels, s);
  return out;
}

// ---------------------------------------------------------------------------

double default_pleat_epsilon() { return 0.05; }

Rect linear_member_domain(double M) { return Rect{-1.0 / M, 1.0 / M, -1.0, 1.0}; }

Rect pleat_window(double epsilon_prime) {
  const double c = 1.0 + epsilon_prime;
  return Rect{-c - 0.25, -c + 0.25, -2.0, 2.0};
}

GraphSurface linear_member(int k, const Scales& sc, double theta) {
  GraphSurface g;
  g.kind = GraphKind::Linear;
  g.epsilon = 1.0 / sc.M;
  g.theta = theta;
  g.translation = {0.0, k * sc.R, 0.0, k * sc.R};
  g.domain = linear_member_domain(sc.M);
  return g;
}

double pleat_angle(Sector perturbation_sector) {
  require_sector(perturbation_sector);
  // The unrotated pleat doubles the patch of Z_3; rotation turns the real
  // picture clockwise by theta.
  const Sector target = next_sector(perturbation_sector);
  return kTwoPi * ((3 - target) % 3) / 3.0;
}

Sector pleat_perturbation_sector(double theta) {
  const double dx = -std::cos(theta);
  const double dy = std::sin(theta);
  Sector best = 1;
  for (Sector s = 2; s <= 3; ++s)
    if (sector_defect(s, dx, dy) < sector_defect(best, dx, dy)) best = s;
  return prev_sector(best);
}

GraphSurface pleat_member(int k, Sector perturbation_sector, const Scales& sc, double epsilon) {
  GraphSurface g;
  g.kind = GraphKind::Cubic;
  g.epsilon = epsilon;
  g.theta = pleat_angle(perturbation_sector);
  const double shift = 1.0 + sc.epsilon_prime;
  g.translation = {std::sin(g.theta) * shift, k * sc.R, std::cos(g.theta) * shift, k * sc.R};
  g.domain = pleat_window(sc.epsilon_prime);
  g.pleated = true;
  return g;
}

BridgeSurfaceData expected_bridge_data(const std::vector<GraphSurface>& family) {
  BridgeSurfaceData data = trivial_disks(static_cast<int>(family.size()));
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (!family[k].pleated) continue;
    data = perturb(data, PerturbationMove{pleat_perturbation_sector(family[k].theta),
                                          static_cast<int>(k)});
  }
  return data;
}

BridgeCertificate certify_bridge_position(const std::vector<GraphSurface>& family,
                                          const PolyhedronQM& q, double R, const Tolerances& tol,
                                          const BridgeSurfaceData& declared, int grid_n) {
  BridgeCertificate cert;
  cert.declared = declared;
  cert.tol = tol;
  cert.grid_n = grid_n;
  if (!(R > 0.0)) throw std::invalid_argument("certify_bridge_position: R must be positive");

  for (std::size_t k = 0; k < family.size(); ++k) {
    const GraphSurface& g = family[k];
    const bool clip = !g.pleated;
    const std::string tag = "member " + std::to_string(k + 1);

    const auto search = bridge_points(g, q, tol.residual, clip);
    cert.unconverged_seeds += search.unconverged_seeds;
    for (const auto& bp : search.points) {
      cert.bridge_points.push_back({static_cast<int>(k), bp});
      cert.transversality_margins.push_back(bp.transversality);
      cert.max_residual = std::max(cert.max_residual, bp.residual);
      if (bp.transversality < tol.residual) {
        cert.failures.push_back(tag + ": transversality margin below tolerance");
      }
    }
    for (Sector s = 1; s <= 3; ++s) {
      const auto trace = tangle_trace(g, s, q, grid_n, clip);
      if (trace.grid_too_coarse) cert.failures.push_back(tag + ": contour grid too coarse");
      if (g.kind == GraphKind::Linear && trace.level_components != 1) {
        cert.failures.push_back(tag + ": linear level set is not a single arc");
      }
      // {phi_s = 0} carries H_{s+1} = Z_s cap Z_{s+1}.
      cert.arcs_per_handlebody[next_sector(s) - 1] += trace.handlebody_arcs;
    }
    const Triple patches = patch_counts(g, q, grid_n, tol.band, clip);
    for (int s = 0; s < 3; ++s) cert.patches_per_sector[s] += patches[s];
  }

  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < cert.bridge_points.size(); ++a)
    for (std::size_t b = a + 1; b < cert.bridge_points.size(); ++b) {
      if (cert.bridge_points[a].member == cert.bridge_points[b].member) continue;
      sep = std::min(sep, distance(cert.bridge_points[a].point.point,
                                   cert.bridge_points[b].point.point));
    }
  cert.min_separation = sep;
  if (sep <= tol.residual * 1e3) cert.failures.push_back("family members are not separated");
  if (cert.max_residual >= tol.residual) cert.failures.push_back("bridge point residual too large");
  if (static_cast<int>(cert.bridge_points.size()) != declared.bridge_points) {
    cert.failures.push_back("bridge point count " + std::to_string(cert.bridge_points.size()) +
                            " != declared " + std::to_string(declared.bridge_points));
  }
  if (cert.arcs_per_handlebody != declared.arcs) cert.failures.push_back("arc counts differ from declared");
  if (cert.patches_per_sector != declared.patches) {
    cert.failures.push_back("patch counts differ from declared");
  }
  cert.valid = cert.failures.empty();
  return cert;
}

BridgeCertificate certify_bridge_position(const std::vector<GraphSurface>& family,
                                          const PolyhedronQM& q, double R, const Tolerances& tol,
                                          int grid_n) {
  return certify_bridge_position(family, q, R, tol, expected_bridge_data(family), grid_n);
}

// ---------------------------------------------------------------------------

IsotopyResult isotopy_check(const GraphSurface& member, const PolyhedronQM& q, int samples,
                            std::uint64_t seed) {
  if (member.kind != GraphKind::Linear || member.theta != 0.0 || member.translation[0] != 0.0 ||
      member.translation[2] != 0.0 || member.translation[1] != member.translation[3]) {
    throw std::invalid_argument("isotopy_check: expects an unrotated linear family member G_k");
  }
  const double eps = member.epsilon;
  const double kR = member.translation[1];
  const double M = q.M();
  const Rect& d = member.domain;

  auto homotopy = [&](double t, double x, double y) {
    return PointC2{eps * y, (t - 1.0) * eps * x + kR, x, (1.0 - t) * y + t * M + (1.0 - t) * kR};
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  IsotopyResult res;
  for (int s = 0; s < samples; ++s) {
    IsotopySample smp;
    // Every tenth sample sits on the t = 1 end; the first checks t = 0.
    smp.t = (s == 0) ? 0.0 : (s % 10 == 9 ? 1.0 : unit(rng));
    smp.x = d.xmin + d.width() * unit(rng);
    smp.y = d.ymin + d.height() * unit(rng);
    smp.point = homotopy(smp.t, smp.x, smp.y);
    ++res.samples_checked;

    if (smp.t == 0.0 && distance(smp.point, evaluate(member, smp.x, smp.y)) > 1e-12 * (1.0 + kR)) {
      smp.reason = "t = 0 slice does not reproduce the graph";
    } else if (!q.membership(smp.point).inside) {
      smp.reason = "sample leaves Q_M";
    } else if (smp.t == 1.0 && smp.point.y2 != M) {
      smp.reason = "t = 1 sample not on y2 = M";
    }
    if (!smp.reason.empty()) {
      res.ok = false;
      res.first_violation = smp;
      break;
    }
  }
  return res;
}

}  // namespace tw
