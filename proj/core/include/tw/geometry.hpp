#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tw/bridge.hpp"
#include "tw/contour.hpp"
#include "tw/trisection.hpp"

namespace tw {

using cplx = std::complex<double>;

/// Point of C^2 with z_j = x_j + i y_j.
struct PointC2 {
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;

  static PointC2 from_complex(cplx z1, cplx z2) { return {z1.real(), z1.imag(), z2.real(), z2.imag()}; }
  cplx z1() const { return {x1, y1}; }
  cplx z2() const { return {x2, y2}; }
  bool finite() const;
  friend PointC2 operator+(const PointC2& a, const PointC2& b) {
    return {a.x1 + b.x1, a.y1 + b.y1, a.x2 + b.x2, a.y2 + b.y2};
  }
};

double distance(const PointC2& a, const PointC2& b);

/// Engineering tolerances shared by the numerical certificates.
struct Tolerances {
  double residual = 1e-9;
  double band = 1e-7;
};

/// Default scales satisfying 1/M << 1 << R << M.
struct Scales {
  double M = 100.0;
  double R = 10.0;
  double epsilon_prime = 0.01;
};

// ---------------------------------------------------------------------------
// Q_M and its trisection

/// {|x_j| <= 1/M, |y_j| <= M}.
class PolyhedronQM {
public:
  explicit PolyhedronQM(double M);
  double M() const { return M_; }

  struct Membership {
    bool inside = false;
    double margin = 0.0;  // minimum slack over the four bounds; negative outside
  };
  Membership membership(const PointC2& p) const;

  /// Moduli of the eight holomorphic functions cutting out Q_M as an
  /// analytic polyhedron: exp(+-z_j - 1/M) for the real bounds and
  /// exp(-+i z_j - M) for the imaginary ones. Q_M = {all moduli <= 1}.
  std::array<double, 8> defining_moduli(const PointC2& p) const;

private:
  double M_;
};

inline PolyhedronQM::Membership qm_membership(const PolyhedronQM& q, const PointC2& p) {
  return q.membership(p);
}

/// phi_1 = x2, phi_2 = -sqrt3 x1 - x2, phi_3 = sqrt3 x1 - x2.
double phi(Sector s, double x1, double x2);
inline double phi(Sector s, const PointC2& p) { return phi(s, p.x1, p.x2); }

/// max(phi_s, -phi_{s-1}); Z_s is where this is <= 0.
double sector_defect(Sector s, double x1, double x2);

enum class Stratum { Z1, Z2, Z3, H1, H2, H3, Sigma };
std::string to_string(Stratum s);

/// Closed sectors containing p up to tol, as a bitmask (bit s-1 for Z_s).
unsigned containing_sectors(const PointC2& p, double tol);

/// Stratum of the trisection Z_s = {max(phi_s, -phi_{s-1}) <= 0} with
/// H_s = Z_{s-1} cap Z_s and Sigma = {x1 = x2 = 0}, up to a band of width tol.
Stratum sector_of(const PointC2& p, double tol);

// ---------------------------------------------------------------------------
// Graph surfaces

enum class GraphKind { Linear, Cubic };

/// Linear: z -> (-i eps z, z). Cubic: z -> (i eps (z^3 - z), z).
/// The result is rotated by [cos t, sin t; -sin t, cos t] over C and
/// translated.
struct GraphSurface {
  GraphKind kind = GraphKind::Linear;
  double epsilon = 0.01;
  double theta = 0.0;
  std::array<double, 4> translation{0, 0, 0, 0};  // re1, im1, re2, im2
  Rect domain{-1, 1, -1, 1};
  bool pleated = false;
};

PointC2 graph_point(const GraphSurface& g, double x, double y);

/// Complex derivative of z -> (w1, w2) along the graph.
std::array<cplx, 2> graph_derivative(const GraphSurface& g, cplx z);

struct BridgePoint {
  PointC2 point;
  double x = 0, y = 0;     // parameter
  double residual = 0;     // max |Re w_j|
  double transversality = 0;  // |det| of d(Re w1, Re w2)/d(x, y)
  bool in_qm = true;
};

struct BridgePointSearch {
  std::vector<BridgePoint> points;
  int seeds = 0;
  int unconverged_seeds = 0;
  double dedup_radius = 0;
};

/// Solutions of Re w1 = Re w2 = 0 in the parameter domain by Newton iteration
/// from a 32 x 32 seed grid. When clip_to_qm is set, solutions outside Q_M
/// are discarded.
BridgePointSearch bridge_points(const GraphSurface& g, const PolyhedronQM& q, double tol,
                                bool clip_to_qm = true);

struct TangleTrace {
  int level_components = 0;       // components of {phi_s o G = 0} in the domain
  int handlebody_arcs = 0;        // components lying in Z_s cap Z_{s+1}
  std::vector<Polyline> polylines;
  std::vector<Polyline> arcs;
  int ambiguous_cells = 0;
  bool grid_too_coarse = false;
};

/// Traces phi_s(G(x, y)) = 0 over the parameter domain with marching squares.
/// grid_n >= 64 cells per side.
TangleTrace tangle_trace(const GraphSurface& g, Sector s, const PolyhedronQM& q, int grid_n,
                         bool clip_to_qm = true);

/// Connected components of G^{-1}(int Z_s) for each s, by flood fill over
/// nodes strictly inside the open sector (margin band).
Triple patch_counts(const GraphSurface& g, const PolyhedronQM& q, int grid_n, double band,
                    bool clip_to_qm = true);

// ---------------------------------------------------------------------------
// Families

double default_pleat_epsilon();
Rect linear_member_domain(double M);
Rect pleat_window(double epsilon_prime);

/// G_k = Gamma_{1/M, theta} + <ikR, ikR>, k >= 1.
GraphSurface linear_member(int k, const Scales& sc, double theta = 0.0);

/// Rotation angle placing the pleat so that a sector-s perturbation adds its
/// patch to sector s+1.
double pleat_angle(Sector perturbation_sector);

/// Sector of the perturbation realized by a pleat at angle theta.
Sector pleat_perturbation_sector(double theta);

/// Cubic pleat R_theta (C + <0, 1 + eps'>) + <ikR, ikR> for a
/// sector-s perturbation.
GraphSurface pleat_member(int k, Sector perturbation_sector, const Scales& sc,
                          double epsilon = default_pleat_epsilon());

struct CertifiedPoint {
  int member = 0;
  BridgePoint point;
};

struct BridgeCertificate {
  std::vector<CertifiedPoint> bridge_points;
  Triple arcs_per_handlebody{0, 0, 0};
  Triple patches_per_sector{0, 0, 0};
  std::vector<double> transversality_margins;
  double max_residual = 0;
  double min_separation = 0;
  BridgeSurfaceData declared;
  Tolerances tol;
  int grid_n = 0;
  int unconverged_seeds = 0;
  bool valid = false;
  std::vector<std::string> failures;
};

/// Expected stratum counts for a family: n trivial disks with one perturbation
/// per pleated member.
BridgeSurfaceData expected_bridge_data(const std::vector<GraphSurface>& family);

/// Arcs per handlebody H_s = Z_{s-1} cap Z_s, patches per sector and bridge
/// points over the family, checked against `declared`.
BridgeCertificate certify_bridge_position(const std::vector<GraphSurface>& family,
                                          const PolyhedronQM& q, double R, const Tolerances& tol,
                                          const BridgeSurfaceData& declared, int grid_n = 256);
BridgeCertificate certify_bridge_position(const std::vector<GraphSurface>& family,
                                          const PolyhedronQM& q, double R, const Tolerances& tol,
                                          int grid_n = 256);

// ---------------------------------------------------------------------------

struct IsotopySample {
  double t = 0, x = 0, y = 0;
  PointC2 point;
  std::string reason;
};

struct IsotopyResult {
  bool ok = true;
  int samples_checked = 0;
  std::optional<IsotopySample> first_violation;
};

/// Samples (eps y, (t-1) eps x + kR, x, (1-t) y + tM + (1-t) kR) over
/// t in [0,1] and the member's domain: interior samples must stay in Q_M and
/// t = 1 samples must lie on y2 = M.
IsotopyResult isotopy_check(const GraphSurface& member, const PolyhedronQM& q, int samples,
                            std::uint64_t seed = 1);

}  // namespace tw
