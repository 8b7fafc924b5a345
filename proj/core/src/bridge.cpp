#include "tw/bridge.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace tw {

ValidationReport validate_bridge(const BridgeSurfaceData& s) {
  ValidationReport r;
  if (s.braid_index < 0) r.violations.push_back("braid index n < 0");
  if (s.bridge_index < 0) r.violations.push_back("bridge index b < 0");
  if (s.bridge_points < 0) r.violations.push_back("bridge_points < 0");
  for (int i = 0; i < 3; ++i) {
    if (s.arcs[i] < 0) r.violations.push_back("a" + std::to_string(i + 1) + " < 0");
    if (s.patches[i] < 0) r.violations.push_back("c" + std::to_string(i + 1) + " < 0");
  }
  if (s.closed_ambient) {
    if (s.braid_index != 0) r.violations.push_back("closed ambient requires n = 0");
    if (s.bridge_points != 2 * s.bridge_index) r.violations.push_back("bridge_points != 2b");
  } else if (s.bridge_points != 2 * s.bridge_index + s.braid_index) {
    r.violations.push_back("bridge_points != 2b + n");
  }
  const int endpoints = s.bridge_points + boundary_arc_endpoints(s);
  for (int i = 0; i < 3; ++i) {
    if (2 * s.arcs[i] != endpoints) {
      r.violations.push_back("2*a" + std::to_string(i + 1) + " != bridge_points + n_boundary");
    }
  }
  if (!s.points_per_component.empty()) {
    const int total =
        std::accumulate(s.points_per_component.begin(), s.points_per_component.end(), 0);
    if (total != s.bridge_points) {
      r.violations.push_back("points_per_component does not sum to bridge_points");
    }
    if (!s.closed_ambient &&
        s.points_per_component.size() != static_cast<std::size_t>(s.braid_index)) {
      r.violations.push_back("points_per_component must list one entry per boundary strand");
    }
    for (int c : s.points_per_component) {
      if (c < 1) {
        r.violations.push_back("component without bridge points");
        break;
      }
    }
  }
  return r;
}

BridgeSurfaceData trivial_disks(int n) {
  if (n < 0) throw std::invalid_argument("trivial_disks: n < 0");
  BridgeSurfaceData s;
  s.braid_index = n;
  s.bridge_index = 0;
  s.bridge_points = n;
  s.arcs = {n, n, n};
  s.patches = {n, n, n};
  s.points_per_component.assign(static_cast<std::size_t>(n), 1);
  return s;
}

BridgeSurfaceData perturb(const BridgeSurfaceData& s, const PerturbationMove& m) {
  require_sector(m.sector);
  const auto report = validate_bridge(s);
  if (!report.valid()) throw std::invalid_argument("perturb: " + report.violations.front());

  BridgeSurfaceData out = s;
  out.bridge_index += 1;
  out.bridge_points += 2;
  out.patches[next_sector(m.sector) - 1] += 1;
  const int endpoints = out.bridge_points + boundary_arc_endpoints(out);
  out.arcs = {endpoints / 2, endpoints / 2, endpoints / 2};

  if (!out.points_per_component.empty()) {
    const int c = m.component.value_or(0);
    if (c < 0 || static_cast<std::size_t>(c) >= out.points_per_component.size()) {
      throw std::invalid_argument("perturb: component index out of range");
    }
    out.points_per_component[static_cast<std::size_t>(c)] += 2;
  }
  return out;
}

int surface_euler(const BridgeSurfaceData& s) {
  const auto report = validate_bridge(s);
  if (!report.valid()) throw std::invalid_argument("surface_euler: " + report.violations.front());
  const int arcs = s.arcs[0] + s.arcs[1] + s.arcs[2];
  const int patches = s.patches[0] + s.patches[1] + s.patches[2];
  return s.bridge_points - arcs + patches + kSurfaceEulerBoundaryCorrection;
}

}  // namespace tw
