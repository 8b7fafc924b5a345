#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tw/bridge.hpp"
#include "tw/cover.hpp"
#include "tw/cusp.hpp"
#include "tw/geometry.hpp"
#include "tw/model_cover.hpp"
#include "tw/pipeline.hpp"
#include "tw/psh.hpp"
#include "tw/reconstruct.hpp"
#include "tw/trisection.hpp"

using namespace tw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome stein_pipeline() {
  std::vector<Triple> configs;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int c = 0; a + b + c <= 3; ++c) configs.push_back({a, b, c});
  for (int k = 4; k <= 5; ++k)
    for (int l = 0; l < 3; ++l) {
      Triple t{0, 0, 0};
      t[l] = k;
      configs.push_back(t);
    }
  Outcome out;
  const auto t0 = Clock::now();
  int passed = 0;
  for (const auto& n : configs) {
    PipelineConfig cfg;
    cfg.n = n;
    const auto r = run_stein_b4(cfg);
    const RelTrisectionParams want{n[0] + n[1] + n[2], n, 0, 1};
    // the report is checked through the library call it summarizes
    RelTrisectionParams got = standard_b4();
    BridgeSurfaceData locus = trivial_disks(n[0] + n[1] + n[2]);
    int k = 0;
    for (Sector s = 1; s <= 3; ++s)
      for (int i = 0; i < n[s - 1]; ++i) locus = perturb(locus, {prev_sector(s), k++});
    const int total = n[0] + n[1] + n[2];
    got = pullback_trisection(standard_b4(), locus, total ? standard_rho(total) : MonodromyRep{1, {}});
    if (r.exit_code == kExitOk && got == want) ++passed;
  }
  const double secs = seconds_since(t0);
  out.pass = passed == static_cast<int>(configs.size()) && configs.size() == 26 && secs < 5.0;
  out.detail = std::to_string(passed) + "/" + std::to_string(configs.size()) + " configs exit 0 with (n,(n1,n2,n3);0,1), " +
               std::to_string(secs).substr(0, 5) + " s";
  return out;
}

Outcome perturbation_stabilization() {
  int checks = 0, passed = 0;
  for (int n = 1; n <= 4; ++n)
    for (Sector l = 1; l <= 3; ++l)
      for (int c = 0; c < n; ++c) {
        auto locus = trivial_disks(n);
        locus.points_per_component.assign(n, 1);
        ++checks;
        if (perturbation_stabilization_check(locus, standard_rho(n), {l, c})) ++passed;
      }
  return {passed == checks, std::to_string(passed) + "/" + std::to_string(checks) + " placements"};
}

Outcome euler_identity() {
  int checks = 0, passed = 0;
  for (int g = 0; g <= 4; ++g)
    for (int a = 0; a <= g; ++a)
      for (int b = 0; b <= g; ++b)
        for (int c = 0; c <= g; ++c) {
          ++checks;
          if (euler_char_closed({g, {a, b, c}}) == oracle::closed_euler(g, {a, b, c})) ++passed;
        }
  const bool examples = euler_char_closed({0, {0, 0, 0}}) == 2 && euler_char_closed({1, {1, 0, 0}}) == 2;
  return {passed == checks && examples,
          std::to_string(passed) + "/" + std::to_string(checks) + " tuples; S4 examples " +
              (examples ? "2, 2" : "wrong")};
}

Outcome genus_one_homology() {
  const auto h = boundary_homology(unbalanced_s4_diagram(1));
  const bool ok = h[0].group == AbelianGroup{1, {}} && h[1].group.trivial() && h[2].group.trivial();
  return {ok, "(" + h[0].group.to_string() + ", " + h[1].group.to_string() + ", " +
                  h[2].group.to_string() + ")"};
}

Outcome bridge_certification() {
  const Scales sc;
  const PolyhedronQM q(sc.M);
  const Tolerances tol;
  const auto t0 = Clock::now();
  bool ok = true;
  double worst = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<GraphSurface> fam;
    for (int k = 1; k <= n; ++k) fam.push_back(linear_member(k, sc));
    const auto cert = certify_bridge_position(fam, q, sc.R, tol);
    ok = ok && cert.valid && cert.bridge_points.size() == static_cast<std::size_t>(n) &&
         cert.arcs_per_handlebody == Triple{n, n, n} && cert.patches_per_sector == Triple{n, n, n};
    for (std::size_t i = 0; i < cert.bridge_points.size(); ++i) {
      const auto& p = cert.bridge_points[i].point.point;
      const double kR = (i + 1) * sc.R;
      worst = std::max({worst, cert.bridge_points[i].point.residual, std::abs(p.x1), std::abs(p.x2),
                        std::abs(p.y1 - kR), std::abs(p.y2 - kR)});
    }
    for (Sector s = 1; s <= 3; ++s) {
      auto pleated = fam;
      pleated.back() = pleat_member(n, s, sc);
      const auto pc = certify_bridge_position(pleated, q, sc.R, tol);
      Triple patches = cert.patches_per_sector;
      patches[next_sector(s) - 1] += 1;
      ok = ok && pc.valid && pc.bridge_points.size() == cert.bridge_points.size() + 2 &&
           pc.patches_per_sector == patches;
    }
  }
  const double secs = seconds_since(t0);
  ok = ok && worst < 1e-9 && secs < 2.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "n=1..3 linear + 9 pleats, max residual %.1e, %.2f s", worst, secs);
  return {ok, buf};
}

Outcome cusp_counts() {
  const auto rep = cusp_analysis(cusp_default_samples(10000, 1));
  bool shape = true;
  for (int r = 0; r < 3; ++r) {
    const auto& s = rep.regions[r];
    shape = shape && s.samples > 0 && s.fiber_counts.size() == 1 &&
            s.fiber_counts.begin()->first == expected_fiber_count(static_cast<CuspRegion>(r));
  }
  return {rep.ok && shape && rep.misclassified == 0,
          "interior/exterior/fold samples " + std::to_string(rep.regions[0].samples) + "/" +
              std::to_string(rep.regions[1].samples) + "/" + std::to_string(rep.regions[2].samples) +
              ", misclassified " + std::to_string(rep.misclassified)};
}

Outcome model_covering() {
  bool ok = true;
  double worst = 0;
  for (double eps : {0.1, 1.0})
    for (int n = 1; n <= 6; ++n) {
      const auto r = polynomial_cover_check(n, eps, 100, 1, 1e-10);
      worst = std::max(worst, r.critical_point_error);
      ok = ok && r.ok && r.sheet_count_failures == 0 && r.regular_values_tested == 100 &&
           r.disk_preimage_euler == 1;
    }
  char buf[120];
  std::snprintf(buf, sizeof buf, "n<=6, eps in {0.1,1}: critical error %.1e, chi = 1", worst);
  return {ok && worst < 1e-10, buf};
}

Outcome sector_psh() {
  const PolyhedronQM q(100);
  const auto cov = sector_coverage(q, 1000000, 1, 1e-7);

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0;
  for (int c = 0; c < 1000; ++c) {
    const ComplexLine line{sample_qm(q, rng), random_direction(rng)};
    const double radius = 0.01 * (0.01 + unit(rng));
    for (Sector s = 1; s <= 3; ++s) {
      const ScalarFieldC2 f = [s](const PointC2& p) { return phi(s, p); };
      worst = std::max(worst, std::abs(circle_average(f, line, 0.0, radius, 128) - f(line.base)));
    }
  }
  const auto survey = glue_subharmonicity_survey(qm_model_glue(), q, 1000, 3);
  const bool ok = cov.ok && cov.samples == 1000000 && worst <= 1e-8 && survey.circles == 1000 &&
                  survey.failures == 0;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "1e6 samples, %ld unlabeled, %ld label errors; phi mean error %.1e; glue failures %d/%d",
                cov.unlabeled, cov.open_label_errors + cov.closed_label_errors, worst, survey.failures,
                survey.circles);
  return {ok, buf};
}

Outcome isotopy() {
  const Scales sc;
  const PolyhedronQM q(sc.M);
  bool ok = true;
  for (int k = 1; k <= 3; ++k) ok = ok && isotopy_check(linear_member(k, sc), q, 10000).ok;
  Scales bad = sc;
  bad.R = bad.M;
  const bool rejected = !isotopy_check(linear_member(1, bad), q, 10000).ok;
  return {ok && rejected, std::string("k=1..3 inside Q_M: ") + (ok ? "yes" : "no") +
                              "; R = M rejected: " + (rejected ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Stein-B4 pipeline", stein_pipeline},
      {"perturbation <-> stabilization", perturbation_stabilization},
      {"Euler identity", euler_identity},
      {"genus-1 homology", genus_one_homology},
      {"bridge certification", bridge_certification},
      {"cusp/fold fiber counts", cusp_counts},
      {"model covering", model_covering},
      {"sector coverage and psh", sector_psh},
      {"isotopy into the boundary", isotopy},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
