#include "tw/cover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tw {

bool is_simple(const MonodromyRep& rho) {
  return std::all_of(rho.meridian_images.begin(), rho.meridian_images.end(),
                     [](const Permutation& p) { return p.is_transposition(); });
}

bool is_transitive(const MonodromyRep& rho) {
  return is_transitive(rho.degree, rho.meridian_images);
}

MonodromyRep standard_rho(int n) {
  if (n < 1) throw std::invalid_argument("standard_rho: n must be at least 1");
  MonodromyRep rho;
  rho.degree = static_cast<std::size_t>(n) + 1;
  for (int k = 1; k <= n; ++k) {
    rho.meridian_images.push_back(Permutation::transposition(rho.degree, k, k + 1));
  }
  return rho;
}

StratumLift lift_stratum(int chi, const std::vector<Permutation>& branch_point_perms,
                         const std::vector<Permutation>& ambient_perms, std::size_t degree) {
  for (const auto& p : branch_point_perms) {
    if (p.degree() != degree) throw std::invalid_argument("lift_stratum: degree mismatch");
    if (!p.is_transposition()) {
      throw std::invalid_argument("lift_stratum: branch image " + p.to_string() +
                                  " is not a transposition (covering not simple)");
    }
  }
  std::vector<Permutation> gens = ambient_perms;
  gens.insert(gens.end(), branch_point_perms.begin(), branch_point_perms.end());
  const auto orbs = orbits(degree, gens);

  std::vector<int> orbit_of(degree, -1);
  for (std::size_t o = 0; o < orbs.size(); ++o)
    for (int sheet : orbs[o]) orbit_of[sheet] = static_cast<int>(o);

  StratumLift lift;
  lift.components = static_cast<int>(orbs.size());
  lift.per_component_euler.resize(orbs.size());
  for (std::size_t o = 0; o < orbs.size(); ++o) {
    lift.per_component_euler[o] = static_cast<int>(orbs[o].size()) * chi;
  }
  for (const auto& p : branch_point_perms) {
    lift.per_component_euler[orbit_of[p.transposed_pair().first - 1]] -= 1;
  }
  lift.euler_char = static_cast<int>(degree) * chi - static_cast<int>(branch_point_perms.size());
  return lift;
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument("pullback_trisection: " + msg);
}

int single_component_euler(const StratumLift& s, const char* stratum) {
  require(s.components == 1, std::string(stratum) + " lifts to a disconnected stratum");
  return s.euler_char;
}

}  // namespace

PullbackDetails pullback_details(const RelTrisectionParams& base, const BridgeSurfaceData& locus,
                                 const MonodromyRep& rho) {
  require(base == standard_b4(), "only the standard (0,(0,0,0);0,1) base is supported, got " +
                                     to_string(base));
  const auto report = validate_bridge(locus);
  require(report.valid(), report.valid() ? "" : report.violations.front());
  require(!locus.closed_ambient, "branch locus must be properly embedded in B^4");
  const std::size_t n = static_cast<std::size_t>(locus.braid_index);
  require(rho.meridian_images.size() == n,
          "monodromy lists " + std::to_string(rho.meridian_images.size()) +
              " meridians for a locus with " + std::to_string(n) + " components");
  require(is_simple(rho), "monodromy is not simple");
  require(is_transitive(rho), "monodromy is not transitive");
  for (const auto& p : rho.meridian_images) require(p.degree() == rho.degree, "degree mismatch");

  // Bridge points grouped by component; untracked extras go to component 1.
  std::vector<int> per_component = locus.points_per_component;
  if (per_component.empty() && n > 0) {
    per_component.assign(n, 1);
    per_component[0] += locus.bridge_points - static_cast<int>(n);
  }
  std::vector<Permutation> point_perms;
  for (std::size_t k = 0; k < n; ++k)
    for (int i = 0; i < per_component[k]; ++i) point_perms.push_back(rho.meridian_images[k]);

  const auto& all = rho.meridian_images;
  const std::size_t d = rho.degree;
  PullbackDetails out;
  out.central = lift_stratum(1, point_perms, all, d);

  // The boundary circle of the central disk encircles every bridge point.
  Permutation around(d);
  for (const auto& p : point_perms) around = p * around;
  out.boundary_components = static_cast<int>(around.cycle_type().size());

  // Strata are products of the 2-disk with intervals; each arc or patch
  // meets a normal disk in one branch point.
  auto branch_set = [&](int count) {
    std::vector<Permutation> perms;
    for (int i = 0; i < count; ++i) perms.push_back(all[static_cast<std::size_t>(i) % n]);
    return perms;
  };
  for (int l = 0; l < 3; ++l) {
    out.handlebodies[l] = lift_stratum(1, n ? branch_set(locus.arcs[l]) : std::vector<Permutation>{},
                                       all, d);
    out.sectors[l] = lift_stratum(1, n ? branch_set(locus.patches[l]) : std::vector<Permutation>{},
                                  all, d);
  }
  out.page = lift_stratum(1, std::vector<Permutation>(all.begin(), all.end()), all, d);

  const int b = out.boundary_components;
  const int chi_central = single_component_euler(out.central, "central surface");
  const int chi_page = single_component_euler(out.page, "page");
  require((2 - b - chi_central) % 2 == 0 && 2 - b - chi_central >= 0,
          "lifted central surface has inconsistent Euler characteristic");
  require((2 - b - chi_page) % 2 == 0 && 2 - b - chi_page >= 0,
          "lifted page has inconsistent Euler characteristic");

  RelTrisectionParams up;
  up.genus = (2 - b - chi_central) / 2;
  up.page_genus = (2 - b - chi_page) / 2;
  up.boundary_components = b;
  for (int l = 0; l < 3; ++l) {
    up.k[l] = 1 - single_component_euler(out.sectors[l], "sector");
    const int chi_h = single_component_euler(out.handlebodies[l], "handlebody");
    require(chi_h == 2 - up.genus - up.page_genus - b,
            "lifted handlebody is not a compression body between the lifted surfaces");
  }
  require(validate_params(up).valid(), "lifted parameters " + to_string(up) + " are not realizable");

  out.total_euler = chi_central;
  for (int l = 0; l < 3; ++l) {
    out.total_euler += out.sectors[l].euler_char - out.handlebodies[l].euler_char;
  }
  out.upstairs = up;
  return out;
}

RelTrisectionParams pullback_trisection(const RelTrisectionParams& base,
                                        const BridgeSurfaceData& locus, const MonodromyRep& rho) {
  return pullback_details(base, locus, rho).upstairs;
}

bool perturbation_stabilization_check(const BridgeSurfaceData& locus, const MonodromyRep& rho,
                                      const PerturbationMove& move) {
  const auto base = standard_b4();
  const auto before = pullback_trisection(base, locus, rho);
  const auto after = pullback_trisection(base, perturb(locus, move), rho);
  return after == stabilize(before, next_sector(move.sector));
}

}  // namespace tw
