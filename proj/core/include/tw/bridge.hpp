#pragma once

#include <optional>
#include <vector>

#include "tw/trisection.hpp"

namespace tw {

/// Stratum counts of a surface in (relative) bridge position.
///
/// Relative case: the n braid strands of the boundary each contribute one arc
/// endpoint on the boundary of every handlebody, so 2 a = bridge_points + n.
/// Closed case: n = 0 and every arc has both endpoints at bridge points.
struct BridgeSurfaceData {
  int braid_index = 0;
  int bridge_index = 0;
  int bridge_points = 0;
  Triple arcs{0, 0, 0};
  Triple patches{0, 0, 0};
  bool closed_ambient = false;
  /// Optional split of bridge_points over the surface components (relative
  /// case: one entry per disk, each an odd count). Empty when untracked.
  std::vector<int> points_per_component;

  friend bool operator==(const BridgeSurfaceData&, const BridgeSurfaceData&) = default;
};

struct PerturbationMove {
  Sector sector = 1;
  /// Component receiving the finger move; only meaningful when
  /// points_per_component is tracked.
  std::optional<int> component;
};

/// Arc endpoints on the boundary of each handlebody.
inline int boundary_arc_endpoints(const BridgeSurfaceData& s) {
  return s.closed_ambient ? 0 : s.braid_index;
}

/// Added to the cell count in surface_euler; zero because the covering by
/// closed strata already accounts for boundary arcs.
inline constexpr int kSurfaceEulerBoundaryCorrection = 0;

ValidationReport validate_bridge(const BridgeSurfaceData& s);

/// n trivial disks in the standard trisection of B^4, one bridge point each.
BridgeSurfaceData trivial_disks(int n);

BridgeSurfaceData perturb(const BridgeSurfaceData& s, const PerturbationMove& m);

int surface_euler(const BridgeSurfaceData& s);

}  // namespace tw
