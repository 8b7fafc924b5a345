#pragma once

#include <vector>

#include "tw/bridge.hpp"
#include "tw/permutation.hpp"
#include "tw/trisection.hpp"

namespace tw {

/// Monodromy of a branched cover: the image of the meridian of each branch
/// locus component, components ordered k = 1..n.
struct MonodromyRep {
  std::size_t degree = 1;
  std::vector<Permutation> meridian_images;
};

bool is_simple(const MonodromyRep& rho);
bool is_transitive(const MonodromyRep& rho);

/// Degree n+1 cover sending the k-th meridian to (k k+1). Throws for n < 1.
MonodromyRep standard_rho(int n);

struct StratumLift {
  int euler_char = 0;
  int components = 0;
  std::vector<int> per_component_euler;
};

/// Lift of a stratum with Euler characteristic chi meeting the branch locus in
/// one point (or one product-disk) per entry of branch_point_perms.
///
/// Sheets are glued by the group generated by ambient_perms together with the
/// branch images; each simple branch point removes one from the Euler
/// characteristic of the orbit its transposition acts on.
StratumLift lift_stratum(int chi, const std::vector<Permutation>& branch_point_perms,
                         const std::vector<Permutation>& ambient_perms, std::size_t degree);

/// Lifted strata of a pullback, kept for reporting and cross-checks.
struct PullbackDetails {
  RelTrisectionParams upstairs;
  StratumLift central;
  std::array<StratumLift, 3> handlebodies;
  std::array<StratumLift, 3> sectors;
  StratumLift page;
  int boundary_components = 0;
  /// chi of the total space from the lifted strata by inclusion-exclusion.
  int total_euler = 0;
};

/// Pull back the standard relative trisection of B^4 along the cover branched
/// over locus. Only the standard base is supported.
PullbackDetails pullback_details(const RelTrisectionParams& base, const BridgeSurfaceData& locus,
                                 const MonodromyRep& rho);

RelTrisectionParams pullback_trisection(const RelTrisectionParams& base,
                                        const BridgeSurfaceData& locus, const MonodromyRep& rho);

/// pullback(perturb(locus, lambda)) == stabilize(pullback(locus), lambda + 1).
bool perturbation_stabilization_check(const BridgeSurfaceData& locus, const MonodromyRep& rho,
                                      const PerturbationMove& move);

}  // namespace tw
