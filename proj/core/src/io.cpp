#include "json_io.hpp"

#include <cmath>
#include <limits>

namespace tw {
namespace detail {

Json parse_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("", "document must be an object");
  require_schema(doc);
  return doc;
}

void require_schema(const Json& doc) {
  const Json& s = field(doc, "schema", "");
  if (!s.is_string() || s.get<std::string>() != kSchemaVersion) {
    throw SchemaError("/schema", std::string("expected \"") + kSchemaVersion + "\"");
  }
}

const Json& field(const Json& obj, const std::string& key, const std::string& at) {
  if (!obj.is_object()) throw SchemaError(at, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at + "/" + key, "missing field");
  return *it;
}

const Json* optional_field(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

long get_long(const Json& v, const std::string& at) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) {
      throw SchemaError(at, "integer out of range");
    }
    return static_cast<long>(u);
  }
  if (v.is_number_integer()) return v.get<long>();
  throw SchemaError(at, "expected an integer");
}

int get_int(const Json& v, const std::string& at) {
  const long x = get_long(v, at);
  if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min()) {
    throw SchemaError(at, "integer out of range");
  }
  return static_cast<int>(x);
}

double get_double(const Json& v, const std::string& at) {
  if (!v.is_number()) throw SchemaError(at, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SchemaError(at, "expected a finite number");
  return d;
}

bool get_bool(const Json& v, const std::string& at) {
  if (!v.is_boolean()) throw SchemaError(at, "expected a boolean");
  return v.get<bool>();
}

Triple get_triple(const Json& v, const std::string& at) {
  if (!v.is_array() || v.size() != 3) throw SchemaError(at, "expected an array of 3 integers");
  return {get_int(v[0], at + "/0"), get_int(v[1], at + "/1"), get_int(v[2], at + "/2")};
}

TrisectionParams closed_params_from(const Json& obj, const std::string& at) {
  TrisectionParams p;
  p.genus = get_int(field(obj, "genus", at), at + "/genus");
  p.k = get_triple(field(obj, "k", at), at + "/k");
  return p;
}

RelTrisectionParams rel_params_from(const Json& obj, const std::string& at) {
  RelTrisectionParams p;
  p.genus = get_int(field(obj, "genus", at), at + "/genus");
  p.k = get_triple(field(obj, "k", at), at + "/k");
  p.page_genus = get_int(field(obj, "p", at), at + "/p");
  p.boundary_components = get_int(field(obj, "b", at), at + "/b");
  return p;
}

Params params_from(const Json& obj, const std::string& at) {
  if (!obj.is_object()) throw SchemaError(at, "expected an object");
  if (optional_field(obj, "p") || optional_field(obj, "b")) return rel_params_from(obj, at);
  return closed_params_from(obj, at);
}

TrisectionDiagram diagram_from(const Json& obj, const std::string& at) {
  TrisectionDiagram d;
  d.genus = get_int(field(obj, "genus", at), at + "/genus");
  if (const Json* b = optional_field(obj, "b")) d.boundary_components = get_int(*b, at + "/b");
  const std::string cat = at + "/cut_systems";
  const Json& cs = field(obj, "cut_systems", at);
  if (!cs.is_array() || cs.size() != 3) throw SchemaError(cat, "expected three cut systems");
  for (std::size_t s = 0; s < 3; ++s) {
    const std::string sat = cat + "/" + std::to_string(s);
    if (!cs[s].is_array()) throw SchemaError(sat, "expected an array of curves");
    for (std::size_t c = 0; c < cs[s].size(); ++c) {
      const std::string curve_at = sat + "/" + std::to_string(c);
      const Json& curve = cs[s][c];
      if (!curve.is_array()) throw SchemaError(curve_at, "expected an integer vector");
      HomologyClass v;
      for (std::size_t i = 0; i < curve.size(); ++i) {
        v.push_back(get_long(curve[i], curve_at + "/" + std::to_string(i)));
      }
      d.cut_systems[s].push_back(std::move(v));
    }
  }
  return d;
}

BridgeSurfaceData bridge_from(const Json& obj, const std::string& at) {
  BridgeSurfaceData s;
  s.braid_index = get_int(field(obj, "braid_index", at), at + "/braid_index");
  s.bridge_index = get_int(field(obj, "bridge_index", at), at + "/bridge_index");
  s.bridge_points = get_int(field(obj, "bridge_points", at), at + "/bridge_points");
  s.arcs = get_triple(field(obj, "arcs", at), at + "/arcs");
  s.patches = get_triple(field(obj, "patches", at), at + "/patches");
  if (const Json* c = optional_field(obj, "closed_ambient")) {
    s.closed_ambient = get_bool(*c, at + "/closed_ambient");
  }
  if (const Json* ppc = optional_field(obj, "points_per_component")) {
    const std::string pat = at + "/points_per_component";
    if (!ppc->is_array()) throw SchemaError(pat, "expected an array of integers");
    for (std::size_t i = 0; i < ppc->size(); ++i) {
      s.points_per_component.push_back(get_int((*ppc)[i], pat + "/" + std::to_string(i)));
    }
  }
  return s;
}

MonodromyRep monodromy_from(const Json& obj, const std::string& at) {
  MonodromyRep rho;
  const int degree = get_int(field(obj, "degree", at), at + "/degree");
  if (degree < 1) throw SchemaError(at + "/degree", "degree must be at least 1");
  rho.degree = static_cast<std::size_t>(degree);
  const std::string mat = at + "/meridians";
  const Json& ms = field(obj, "meridians", at);
  if (!ms.is_array()) throw SchemaError(mat, "expected an array of sheet pairs");
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const std::string kat = mat + "/" + std::to_string(k);
    if (!ms[k].is_array() || ms[k].size() != 2) throw SchemaError(kat, "expected a pair [i, j]");
    const int i = get_int(ms[k][0], kat + "/0");
    const int j = get_int(ms[k][1], kat + "/1");
    if (i < 1 || j < 1 || i > degree || j > degree || i == j) {
      throw SchemaError(kat, "sheets must be distinct labels in 1.." + std::to_string(degree));
    }
    rho.meridian_images.push_back(Permutation::transposition(rho.degree, i, j));
  }
  return rho;
}

GraphSurface graph_from(const Json& obj, const std::string& at) {
  GraphSurface g;
  const Json& kind = field(obj, "kind", at);
  if (!kind.is_string()) throw SchemaError(at + "/kind", "expected \"linear\" or \"cubic\"");
  const std::string k = kind.get<std::string>();
  if (k == "linear") g.kind = GraphKind::Linear;
  else if (k == "cubic") g.kind = GraphKind::Cubic;
  else throw SchemaError(at + "/kind", "expected \"linear\" or \"cubic\"");
  g.epsilon = get_double(field(obj, "epsilon", at), at + "/epsilon");
  if (!(g.epsilon > 0.0)) throw SchemaError(at + "/epsilon", "epsilon must be positive");
  if (const Json* t = optional_field(obj, "theta")) g.theta = get_double(*t, at + "/theta");
  if (const Json* t = optional_field(obj, "translation")) {
    if (!t->is_array() || t->size() != 4) throw SchemaError(at + "/translation", "expected 4 numbers");
    for (std::size_t i = 0; i < 4; ++i) {
      g.translation[i] = get_double((*t)[i], at + "/translation/" + std::to_string(i));
    }
  }
  const Json& d = field(obj, "domain", at);
  if (!d.is_array() || d.size() != 4) throw SchemaError(at + "/domain", "expected [xmin,xmax,ymin,ymax]");
  g.domain = {get_double(d[0], at + "/domain/0"), get_double(d[1], at + "/domain/1"),
              get_double(d[2], at + "/domain/2"), get_double(d[3], at + "/domain/3")};
  if (!(g.domain.width() > 0.0) || !(g.domain.height() > 0.0)) {
    throw SchemaError(at + "/domain", "empty parameter rectangle");
  }
  if (const Json* p = optional_field(obj, "pleated")) g.pleated = get_bool(*p, at + "/pleated");
  return g;
}

Scene scene_from(const Json& obj, const std::string& at) {
  Scene s;
  s.M = get_double(field(obj, "M", at), at + "/M");
  s.R = get_double(field(obj, "R", at), at + "/R");
  if (!(s.M > 1.0)) throw SchemaError(at + "/M", "M must exceed 1");
  if (!(s.R > 0.0)) throw SchemaError(at + "/R", "R must be positive");
  const Json& gs = field(obj, "graphs", at);
  if (!gs.is_array()) throw SchemaError(at + "/graphs", "expected an array");
  for (std::size_t i = 0; i < gs.size(); ++i) {
    s.graphs.push_back(graph_from(gs[i], at + "/graphs/" + std::to_string(i)));
  }
  if (const Json* d = optional_field(obj, "declared")) s.declared = bridge_from(*d, at + "/declared");
  return s;
}

// ---------------------------------------------------------------------------

Json to_json(const TrisectionParams& p) {
  Json j;
  j["genus"] = p.genus;
  j["k"] = p.k;
  return j;
}

Json to_json(const RelTrisectionParams& p) {
  Json j;
  j["genus"] = p.genus;
  j["k"] = p.k;
  j["p"] = p.page_genus;
  j["b"] = p.boundary_components;
  return j;
}

Json to_json(const Params& p) {
  return std::visit([](const auto& v) { return to_json(v); }, p);
}

Json to_json(const TrisectionDiagram& d) {
  Json j;
  j["genus"] = d.genus;
  j["b"] = d.boundary_components;
  j["cut_systems"] = Json::array();
  for (const auto& cs : d.cut_systems) j["cut_systems"].push_back(cs);
  return j;
}

Json to_json(const BridgeSurfaceData& s) {
  Json j;
  j["braid_index"] = s.braid_index;
  j["bridge_index"] = s.bridge_index;
  j["bridge_points"] = s.bridge_points;
  j["arcs"] = s.arcs;
  j["patches"] = s.patches;
  j["closed_ambient"] = s.closed_ambient;
  if (!s.points_per_component.empty()) j["points_per_component"] = s.points_per_component;
  return j;
}

Json to_json(const MonodromyRep& rho) {
  Json j;
  j["degree"] = rho.degree;
  j["meridians"] = Json::array();
  for (const auto& p : rho.meridian_images) {
    const auto [a, b] = p.transposed_pair();
    j["meridians"].push_back({a, b});
  }
  return j;
}

Json to_json(const GraphSurface& g) {
  Json j;
  j["kind"] = g.kind == GraphKind::Linear ? "linear" : "cubic";
  j["epsilon"] = g.epsilon;
  j["theta"] = g.theta;
  j["translation"] = g.translation;
  j["domain"] = {g.domain.xmin, g.domain.xmax, g.domain.ymin, g.domain.ymax};
  j["pleated"] = g.pleated;
  return j;
}

Json to_json(const Scene& s) {
  Json j;
  j["M"] = s.M;
  j["R"] = s.R;
  j["graphs"] = Json::array();
  for (const auto& g : s.graphs) j["graphs"].push_back(to_json(g));
  if (s.declared) j["declared"] = to_json(*s.declared);
  return j;
}

Json to_json(const Tolerances& t) {
  Json j;
  j["residual"] = t.residual;
  j["band"] = t.band;
  return j;
}

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const BridgeCertificate& c) {
  Json j;
  j["valid"] = c.valid;
  j["bridge_points"] = Json::array();
  for (const auto& p : c.bridge_points) {
    Json e;
    e["member"] = p.member + 1;
    e["point"] = {p.point.point.x1, p.point.point.y1, p.point.point.x2, p.point.point.y2};
    e["parameter"] = {p.point.x, p.point.y};
    e["residual"] = p.point.residual;
    e["transversality"] = p.point.transversality;
    j["bridge_points"].push_back(e);
  }
  j["arcs_per_handlebody"] = c.arcs_per_handlebody;
  j["patches_per_sector"] = c.patches_per_sector;
  j["max_residual"] = c.max_residual;
  if (std::isfinite(c.min_separation)) j["min_separation"] = c.min_separation;
  else j["min_separation"] = nullptr;
  j["declared"] = to_json(c.declared);
  j["tolerances"] = to_json(c.tol);
  j["grid_n"] = c.grid_n;
  j["unconverged_seeds"] = c.unconverged_seeds;
  j["failures"] = c.failures;
  return j;
}

Json to_json(const AbelianGroup& g) {
  Json j;
  j["free_rank"] = g.free_rank;
  j["torsion"] = g.torsion;
  j["group"] = g.to_string();
  return j;
}

Json to_json(const HeegaardHomology& h) {
  Json j = to_json(h.group);
  j["invariant_factors"] = h.invariant_factors;
  return j;
}

Json to_json(const PolyCoverReport& r) {
  Json j;
  j["n"] = r.n;
  j["epsilon"] = r.epsilon;
  j["ok"] = r.ok;
  j["critical_points"] = Json::array();
  for (cplx z : r.critical_points) j["critical_points"].push_back(to_json(z));
  j["critical_point_error"] = r.critical_point_error;
  j["critical_values"] = Json::array();
  for (cplx z : r.critical_values) j["critical_values"].push_back(to_json(z));
  j["disk_radius"] = r.disk_radius;
  j["regular_values_tested"] = r.regular_values_tested;
  j["sheet_count_failures"] = r.sheet_count_failures;
  j["local_monodromy"] = Json::array();
  for (const auto& p : r.local_monodromy) j["local_monodromy"].push_back(p.to_string());
  j["boundary_monodromy"] = r.boundary_monodromy.to_string();
  j["simple"] = r.simple;
  j["transitive"] = r.transitive;
  j["disk_preimage"] = {{"euler_char", r.disk_preimage_euler},
                        {"components", r.disk_preimage_components},
                        {"boundary_components", r.disk_preimage_boundary}};
  j["failures"] = r.failures;
  return j;
}

Json to_json(const CuspReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["tol"] = r.tol;
  Json regions;
  for (int i = 0; i < 4; ++i) {
    const auto& s = r.regions[i];
    Json e;
    e["samples"] = s.samples;
    e["expected_fiber_count"] = expected_fiber_count(static_cast<CuspRegion>(i));
    Json counts;
    for (const auto& [k, v] : s.fiber_counts) counts[std::to_string(k)] = v;
    e["fiber_counts"] = counts.is_null() ? Json::object() : counts;
    e["misclassified"] = s.misclassified;
    regions[to_string(static_cast<CuspRegion>(i))] = e;
  }
  j["regions"] = regions;
  j["skipped_in_band"] = r.skipped_in_band;
  j["misclassified"] = r.misclassified;
  j["fold_max_discriminant"] = r.fold_max_discriminant;
  return j;
}

Json to_json(const SectorCoverageReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["samples"] = r.samples;
  j["unlabeled"] = r.unlabeled;
  j["in_band"] = r.in_band;
  j["open_label_errors"] = r.open_label_errors;
  j["closed_label_errors"] = r.closed_label_errors;
  j["per_sector"] = r.per_sector;
  return j;
}

Json to_json(const GlueSurvey& s) {
  Json j;
  j["circles"] = s.circles;
  j["failures"] = s.failures;
  j["rejected"] = s.rejected;
  if (std::isfinite(s.worst_gap)) j["worst_gap"] = s.worst_gap;
  else j["worst_gap"] = nullptr;
  return j;
}

Json to_json(const StratumLift& s) {
  Json j;
  j["euler_char"] = s.euler_char;
  j["components"] = s.components;
  j["per_component_euler"] = s.per_component_euler;
  return j;
}

Json to_json(const PullbackDetails& d) {
  Json j;
  j["upstairs"] = to_json(d.upstairs);
  j["central_surface"] = to_json(d.central);
  j["handlebodies"] = Json::array();
  for (const auto& h : d.handlebodies) j["handlebodies"].push_back(to_json(h));
  j["sectors"] = Json::array();
  for (const auto& s : d.sectors) j["sectors"].push_back(to_json(s));
  j["page"] = to_json(d.page);
  j["boundary_components"] = d.boundary_components;
  j["total_euler"] = d.total_euler;
  return j;
}

Json document() {
  Json j;
  j["schema"] = kSchemaVersion;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

using namespace detail;

Params parse_params(const std::string& text) { return params_from(parse_document(text), ""); }

std::string dump_params(const Params& p) {
  Json j = document();
  j.update(to_json(p));
  return dump(j);
}

TrisectionDiagram parse_diagram(const std::string& text) {
  return diagram_from(parse_document(text), "");
}

std::string dump_diagram(const TrisectionDiagram& d) {
  Json j = document();
  j.update(to_json(d));
  return dump(j);
}

BridgeSurfaceData parse_bridge_surface(const std::string& text) {
  const Json doc = parse_document(text);
  return bridge_from(field(doc, "bridge_surface", ""), "/bridge_surface");
}

std::string dump_bridge_surface(const BridgeSurfaceData& s) {
  Json j = document();
  j["bridge_surface"] = to_json(s);
  return dump(j);
}

MonodromyRep parse_monodromy(const std::string& text) {
  return monodromy_from(parse_document(text), "");
}

std::string dump_monodromy(const MonodromyRep& rho) {
  Json j = document();
  j.update(to_json(rho));
  return dump(j);
}

Scene parse_scene(const std::string& text) { return scene_from(parse_document(text), ""); }

std::string dump_scene(const Scene& s) {
  Json j = document();
  j.update(to_json(s));
  return dump(j);
}

std::string dump_certificate(const BridgeCertificate& c) {
  Json j = document();
  j["certificate"] = to_json(c);
  return dump(j);
}

}  // namespace tw
