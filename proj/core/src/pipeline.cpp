#include "tw/pipeline.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "json_io.hpp"

namespace tw {

using namespace detail;

namespace {

Json config_json(const PipelineConfig& cfg) {
  Json j;
  j["n"] = cfg.n;
  j["M"] = cfg.scales.M;
  j["R"] = cfg.scales.R;
  j["epsilon_prime"] = cfg.scales.epsilon_prime;
  j["tolerances"] = to_json(cfg.tol);
  j["grid_n"] = cfg.grid_n;
  return j;
}

CommandResult finish(Json report, int code) {
  report["exit_code"] = code;
  return {code, dump(report)};
}

}  // namespace

PipelineConfig parse_pipeline_config(const std::string& text) {
  const Json doc = parse_document(text);
  PipelineConfig cfg;
  cfg.n = get_triple(field(doc, "n", ""), "/n");
  if (const Json* v = optional_field(doc, "M")) cfg.scales.M = get_double(*v, "/M");
  if (const Json* v = optional_field(doc, "R")) cfg.scales.R = get_double(*v, "/R");
  if (const Json* v = optional_field(doc, "epsilon_prime")) {
    cfg.scales.epsilon_prime = get_double(*v, "/epsilon_prime");
  }
  if (const Json* v = optional_field(doc, "tol")) cfg.tol.residual = get_double(*v, "/tol");
  if (const Json* v = optional_field(doc, "band")) cfg.tol.band = get_double(*v, "/band");
  if (const Json* v = optional_field(doc, "grid_n")) cfg.grid_n = get_int(*v, "/grid_n");
  check_pipeline_config(cfg);
  return cfg;
}

void check_pipeline_config(const PipelineConfig& cfg) {
  for (int l = 0; l < 3; ++l) {
    if (cfg.n[l] < 0) throw SchemaError("/n/" + std::to_string(l), "must be non-negative");
  }
  const auto& s = cfg.scales;
  if (!(1.0 / s.M < 1.0 && 1.0 < s.R && s.R < s.M)) {
    throw SchemaError("/M", "scales must satisfy 1/M < 1 < R < M");
  }
  if (!(s.epsilon_prime > 0.0)) throw SchemaError("/epsilon_prime", "must be positive");
  if (!(cfg.tol.residual > 0.0)) throw SchemaError("/tol", "must be positive");
  if (!(cfg.tol.band > 0.0)) throw SchemaError("/band", "must be positive");
  if (cfg.grid_n < 64) throw SchemaError("/grid_n", "must be at least 64");
}

CommandResult input_error(const std::string& command, const std::string& location,
                          const std::string& message) {
  Json j = document();
  j["command"] = command;
  j["error"] = {{"location", location}, {"message", message}};
  return finish(std::move(j), kExitInput);
}

CommandResult run_stein_b4(const PipelineConfig& cfg) {
  try {
    check_pipeline_config(cfg);
  } catch (const SchemaError& e) {
    return input_error("stein-b4", e.location(), e.message());
  }
  Json report = document();
  report["command"] = "stein-b4";
  report["config"] = config_json(cfg);

  // Members are numbered k = 1..n; an upstairs stabilization in sector s
  // comes from a pleat of perturbation sector s - 1.
  std::vector<GraphSurface> family;
  const int n = cfg.n[0] + cfg.n[1] + cfg.n[2];
  BridgeSurfaceData declared = trivial_disks(n);
  for (Sector s = 1; s <= 3; ++s)
    for (int i = 0; i < cfg.n[s - 1]; ++i) {
      const int k = static_cast<int>(family.size()) + 1;
      family.push_back(pleat_member(k, prev_sector(s), cfg.scales));
      declared = perturb(declared, PerturbationMove{prev_sector(s), k - 1});
    }
  Json fam = Json::array();
  for (const auto& g : family) fam.push_back(to_json(g));
  report["family"] = fam;

  const PolyhedronQM q(cfg.scales.M);
  const auto cert = certify_bridge_position(family, q, cfg.scales.R, cfg.tol, declared, cfg.grid_n);
  report["certificate"] = to_json(cert);
  if (!cert.valid) {
    report["status"] = "certification failed";
    return finish(std::move(report), kExitCertification);
  }

  const MonodromyRep rho = n > 0 ? standard_rho(n) : MonodromyRep{1, {}};
  report["monodromy"] = to_json(rho);
  const RelTrisectionParams base = standard_b4();
  RelTrisectionParams expected = base;
  for (Sector s = 1; s <= 3; ++s)
    for (int i = 0; i < cfg.n[s - 1]; ++i) expected = stabilize(expected, s);
  report["expected"] = to_json(expected);

  PullbackDetails details;
  try {
    details = pullback_details(base, declared, rho);
  } catch (const std::invalid_argument& e) {
    report["status"] = std::string("pullback failed: ") + e.what();
    return finish(std::move(report), kExitAssertion);
  }
  report["pullback"] = to_json(details);
  report["upstairs"] = to_json(details.upstairs);
  const auto delta = stabilization_delta(details.upstairs, base);
  report["stabilization_delta"] = delta ? Json(*delta) : Json(nullptr);
  const bool ok = details.upstairs == expected && delta && *delta == cfg.n &&
                  details.total_euler == euler_char_relative(details.upstairs);
  report["status"] = ok ? "ok" : "upstairs trisection differs from the stabilized standard one";
  return finish(std::move(report), ok ? kExitOk : kExitAssertion);
}

// ---------------------------------------------------------------------------

namespace {

struct Verify {
  const Json& doc;
  const VerifyOptions& opts;
  Json& result;
};

int verify_params(Verify v) {
  const Params p = params_from(v.doc, "");
  const auto rep = validate_params(p);
  v.result["params"] = to_json(p);
  v.result["kind"] = std::holds_alternative<TrisectionParams>(p) ? "closed" : "relative";
  v.result["valid"] = rep.valid();
  v.result["violations"] = rep.violations;
  if (!rep.valid()) return kExitAssertion;
  v.result["euler_char"] = std::holds_alternative<TrisectionParams>(p)
                               ? euler_char_closed(std::get<TrisectionParams>(p))
                               : euler_char_relative(std::get<RelTrisectionParams>(p));
  return kExitOk;
}

int verify_diagram(Verify v) {
  const TrisectionDiagram d = diagram_from(v.doc, "");
  const auto rep = validate_diagram(d);
  v.result["valid"] = rep.valid();
  v.result["violations"] = rep.violations;
  if (!rep.valid()) return kExitAssertion;
  const auto h = boundary_homology(d);
  Json out = Json::array();
  const int pairs[3][2] = {{1, 2}, {2, 3}, {3, 1}};
  for (int i = 0; i < 3; ++i) {
    Json e;
    e["pair"] = {pairs[i][0], pairs[i][1]};
    e.update(to_json(h[i]));
    out.push_back(e);
  }
  v.result["h1"] = out;
  return kExitOk;
}

PerturbationMove move_from(const Json& obj, const std::string& at) {
  PerturbationMove m;
  m.sector = get_int(field(obj, "sector", at), at + "/sector");
  if (m.sector < 1 || m.sector > 3) throw SchemaError(at + "/sector", "sector must be 1, 2 or 3");
  if (const Json* c = optional_field(obj, "component")) {
    const int comp = get_int(*c, at + "/component");
    if (comp < 1) throw SchemaError(at + "/component", "components are numbered from 1");
    m.component = comp - 1;
  }
  return m;
}

int verify_bridge(Verify v) {
  BridgeSurfaceData s = bridge_from(field(v.doc, "bridge_surface", ""), "/bridge_surface");
  auto rep = validate_bridge(s);
  v.result["bridge_surface"] = to_json(s);
  v.result["valid"] = rep.valid();
  v.result["violations"] = rep.violations;
  if (!rep.valid()) return kExitAssertion;
  v.result["surface_euler"] = surface_euler(s);
  if (const Json* moves = optional_field(v.doc, "perturb")) {
    if (!moves->is_array()) throw SchemaError("/perturb", "expected an array of moves");
    Json steps = Json::array();
    for (std::size_t i = 0; i < moves->size(); ++i) {
      s = perturb(s, move_from((*moves)[i], "/perturb/" + std::to_string(i)));
      steps.push_back({{"bridge_surface", to_json(s)}, {"surface_euler", surface_euler(s)}});
    }
    v.result["perturbed"] = steps;
  }
  return kExitOk;
}

int verify_cover(Verify v) {
  int code = kExitOk;
  if (const Json* model = optional_field(v.doc, "model")) {
    const int n = get_int(field(*model, "n", "/model"), "/model/n");
    const double eps = get_double(field(*model, "epsilon", "/model"), "/model/epsilon");
    if (n < 1) throw SchemaError("/model/n", "must be at least 1");
    if (!(eps > 0.0)) throw SchemaError("/model/epsilon", "must be positive");
    int values = 100;
    if (const Json* r = optional_field(*model, "regular_values")) {
      values = get_int(*r, "/model/regular_values");
    }
    const auto rep = polynomial_cover_check(n, eps, values, v.opts.seed, v.opts.tol.value_or(1e-10));
    v.result["model"] = to_json(rep);
    if (!rep.ok) code = kExitCertification;
  }
  if (const Json* bs = optional_field(v.doc, "bridge_surface")) {
    const BridgeSurfaceData locus = bridge_from(*bs, "/bridge_surface");
    const MonodromyRep rho = monodromy_from(field(v.doc, "monodromy", ""), "/monodromy");
    RelTrisectionParams base = standard_b4();
    if (const Json* b = optional_field(v.doc, "base")) base = rel_params_from(*b, "/base");
    PullbackDetails details;
    try {
      details = pullback_details(base, locus, rho);
    } catch (const std::invalid_argument& e) {
      throw SchemaError("/", e.what());
    }
    v.result["pullback"] = to_json(details);
    if (const Json* m = optional_field(v.doc, "perturb")) {
      const PerturbationMove move = move_from(*m, "/perturb");
      const bool holds = perturbation_stabilization_check(locus, rho, move);
      v.result["perturbation_stabilization"] = {
          {"sector", move.sector},
          {"stabilized_sector", next_sector(move.sector)},
          {"after", to_json(pullback_trisection(base, perturb(locus, move), rho))},
          {"holds", holds}};
      if (!holds) code = kExitAssertion;
    }
  }
  if (v.result.empty()) throw SchemaError("/", "expected \"model\" or \"bridge_surface\"");
  return code;
}

int verify_geometry(Verify v) {
  const Scene scene = scene_from(v.doc, "");
  Tolerances tol;
  if (v.opts.tol) tol.residual = *v.opts.tol;
  int grid_n = 256;
  if (const Json* g = optional_field(v.doc, "grid_n")) grid_n = get_int(*g, "/grid_n");
  if (grid_n < 64) throw SchemaError("/grid_n", "must be at least 64");
  const PolyhedronQM q(scene.M);
  const BridgeSurfaceData declared =
      scene.declared ? *scene.declared : expected_bridge_data(scene.graphs);
  const auto cert = certify_bridge_position(scene.graphs, q, scene.R, tol, declared, grid_n);
  v.result["certificate"] = to_json(cert);
  int code = cert.valid ? kExitOk : kExitCertification;
  if (const Json* iso = optional_field(v.doc, "isotopy_samples")) {
    const int samples = get_int(*iso, "/isotopy_samples");
    Json checks = Json::array();
    for (std::size_t k = 0; k < scene.graphs.size(); ++k) {
      const auto& g = scene.graphs[k];
      if (g.kind != GraphKind::Linear) continue;
      const auto r = isotopy_check(g, q, samples, v.opts.seed);
      Json e{{"member", k + 1}, {"ok", r.ok}, {"samples_checked", r.samples_checked}};
      if (r.first_violation) {
        const auto& s = *r.first_violation;
        e["first_violation"] = {{"t", s.t}, {"x", s.x}, {"y", s.y},
                                {"point", {s.point.x1, s.point.y1, s.point.x2, s.point.y2}},
                                {"reason", s.reason}};
      }
      if (!r.ok) code = kExitCertification;
      checks.push_back(e);
    }
    v.result["isotopy"] = checks;
  }
  return code;
}

int verify_cusp(Verify v) {
  int samples = 10000;
  std::vector<CuspSample> pts;
  if (const Json* s = optional_field(v.doc, "samples")) samples = get_int(*s, "/samples");
  if (samples < 0) throw SchemaError("/samples", "must be non-negative");
  if (const Json* p = optional_field(v.doc, "points")) {
    if (!p->is_array()) throw SchemaError("/points", "expected an array of [x, y]");
    for (std::size_t i = 0; i < p->size(); ++i) {
      const std::string at = "/points/" + std::to_string(i);
      const Json& e = (*p)[i];
      if (!e.is_array() || e.size() != 2) throw SchemaError(at, "expected [x, y]");
      pts.push_back({get_double(e[0], at + "/0"), get_double(e[1], at + "/1"), false});
    }
  } else {
    pts = cusp_default_samples(samples, v.opts.seed);
  }
  const double tol = v.opts.tol.value_or(1e-9);
  const auto rep = cusp_analysis(pts, tol);
  v.result.update(to_json(rep));
  return rep.ok ? kExitOk : kExitCertification;
}

int verify_psh(Verify v) {
  double M = 100.0;
  long samples = 1000000;
  int circles = 1000;
  int m = 128;
  double shrink = 0.0;
  if (const Json* x = optional_field(v.doc, "M")) M = get_double(*x, "/M");
  if (const Json* x = optional_field(v.doc, "samples")) samples = get_long(*x, "/samples");
  if (const Json* x = optional_field(v.doc, "circles")) circles = get_int(*x, "/circles");
  if (const Json* x = optional_field(v.doc, "m")) m = get_int(*x, "/m");
  if (const Json* x = optional_field(v.doc, "shrink")) shrink = get_double(*x, "/shrink");
  if (!(M > 1.0)) throw SchemaError("/M", "M must exceed 1");
  if (samples < 0 || circles < 0) throw SchemaError("/samples", "counts must be non-negative");
  if (m < 64) throw SchemaError("/m", "at least 64 samples per circle");
  if (!(shrink >= 0.0)) throw SchemaError("/shrink", "must be non-negative");
  const double band = 1e-7;
  const PolyhedronQM q(M);

  const auto coverage = sector_coverage(q, samples, v.opts.seed, band);
  v.result["coverage"] = to_json(coverage);

  // phi_s is pluriharmonic: circle averages reproduce the centre value.
  std::mt19937_64 rng(v.opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double mean_tol = 1e-8;
  double worst = 0.0;
  int mean_failures = 0;
  for (int c = 0; c < circles; ++c) {
    const ComplexLine line{sample_qm(q, rng), random_direction(rng)};
    const double radius = (1.0 / M) * (0.01 + unit(rng));
    for (Sector s = 1; s <= 3; ++s) {
      const ScalarFieldC2 f = [s](const PointC2& p) { return phi(s, p); };
      const double gap = std::abs(circle_average(f, line, 0.0, radius, m) - f(line.base));
      worst = std::max(worst, gap);
      if (gap > mean_tol) ++mean_failures;
    }
  }
  v.result["phi_means"] = {{"circles", circles}, {"tol", mean_tol}, {"max_deviation", worst},
                           {"failures", mean_failures}};

  const auto glue = qm_model_glue(shrink, band);
  const auto survey = glue_subharmonicity_survey(glue, q, circles, v.opts.seed, m);
  v.result["glue"] = to_json(survey);
  v.result["glue"]["shrink"] = shrink;
  v.result["band"] = band;
  const bool ok = coverage.ok && mean_failures == 0 && survey.failures == 0;
  return ok ? kExitOk : kExitCertification;
}

int verify_reconstruct(Verify v) {
  const Json& summands = field(v.doc, "summands", "");
  if (!summands.is_array() || summands.size() != 2) {
    throw SchemaError("/summands", "expected two closed parameter sets");
  }
  const auto a = closed_params_from(summands[0], "/summands/0");
  const auto b = closed_params_from(summands[1], "/summands/1");
  ReducibleTrisection r;
  try {
    r = make_reducible(a, b);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/summands", e.what());
  }
  const Json& sp = field(v.doc, "splitting", "");
  if (!sp.is_array() || sp.size() != 3) throw SchemaError("/splitting", "expected 3 pairs [j1, j2]");
  SplittingData s;
  for (std::size_t l = 0; l < 3; ++l) {
    const std::string at = "/splitting/" + std::to_string(l);
    if (!sp[l].is_array() || sp[l].size() != 2) throw SchemaError(at, "expected [j1, j2]");
    s.j[l] = {get_int(sp[l][0], at + "/0"), get_int(sp[l][1], at + "/1")};
  }
  const RelTrisectionParams base = rel_params_from(field(v.doc, "base", ""), "/base");
  const SpineEncoding b_spine = make_spine(diagram_from(field(v.doc, "b_spine", ""), "/b_spine"));
  std::optional<SpineEncoding> z_spine;
  if (const Json* z = optional_field(v.doc, "z_spine")) z_spine = make_spine(diagram_from(*z, "/z_spine"));

  ReconstructionResult res;
  ReconstructionResult other;
  try {
    res = reconstruct_Z(r, s, base, b_spine, z_spine);
    other = reconstruct_Z(r, complement(s), base, b_spine, std::nullopt);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/splitting", e.what());
  }
  v.result["reducible"] = {{"params", to_json(r.params)}, {"delta", r.delta},
                           {"summands", {to_json(a), to_json(b)}}};
  v.result["z_params"] = to_json(res.z_params);
  v.result["z_sector_ranks"] = res.z_sector_ranks;
  v.result["complement_sector_ranks"] = other.z_sector_ranks;
  v.result["verdict"] = res.verdict;
  if (const Json* d = optional_field(v.doc, "delta")) {
    const Json& dd = field(v.doc, "diagram", "");
    const TrisectionDiagram diag = diagram_from(dd, "/diagram");
    if (!d->is_array()) throw SchemaError("/delta", "expected an integer vector");
    HomologyClass delta;
    for (std::size_t i = 0; i < d->size(); ++i) delta.push_back(get_long((*d)[i], "/delta/" + std::to_string(i)));
    try {
      v.result["reducibility_necessary"] = reducibility_necessary(diag, delta);
    } catch (const std::invalid_argument& e) {
      throw SchemaError("/delta", e.what());
    }
  }
  return kExitOk;
}

}  // namespace

CommandResult run_verify(const std::string& subcommand, const std::string& input,
                         const VerifyOptions& opts) {
  using Handler = int (*)(Verify);
  static const std::pair<const char*, Handler> handlers[] = {
      {"params", verify_params},   {"diagram-h1", verify_diagram}, {"bridge", verify_bridge},
      {"cover", verify_cover},     {"geometry", verify_geometry},  {"cusp", verify_cusp},
      {"psh", verify_psh},         {"reconstruct", verify_reconstruct}};
  Handler handler = nullptr;
  for (const auto& [name, h] : handlers)
    if (subcommand == name) handler = h;
  if (!handler) return input_error("verify", "", "unknown subcommand \"" + subcommand + "\"");

  Json report = document();
  report["command"] = "verify";
  report["subcommand"] = subcommand;
  report["seed"] = opts.seed;
  if (opts.tol) report["tol"] = *opts.tol;
  try {
    const bool defaults_ok = subcommand == "cusp" || subcommand == "psh";
    const Json doc = (input.empty() && defaults_ok) ? document() : parse_document(input);
    Json result = Json::object();
    const int code = handler(Verify{doc, opts, result});
    report["result"] = result;
    return finish(std::move(report), code);
  } catch (const SchemaError& e) {
    return input_error("verify " + subcommand, e.location(), e.message());
  } catch (const std::invalid_argument& e) {
    return input_error("verify " + subcommand, "", e.what());
  } catch (const std::overflow_error& e) {
    return input_error("verify " + subcommand, "", e.what());
  }
}

}  // namespace tw
