#include "tw/trisection.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tw {

namespace {

std::string sector_name(int i) { return "k" + std::to_string(i + 1); }

void require_valid(const ValidationReport& r, const char* what) {
  if (!r.valid()) {
    std::string msg = std::string(what) + ": ";
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
      if (i) msg += "; ";
      msg += r.violations[i];
    }
    throw std::invalid_argument(msg);
  }
}

std::string triple_string(const Triple& k) {
  std::ostringstream os;
  os << k[0] << "," << k[1] << "," << k[2];
  return os.str();
}

}  // namespace

void require_sector(Sector s) {
  if (s < 1 || s > 3) throw std::invalid_argument("sector index must be 1, 2 or 3");
}

std::string to_string(const TrisectionParams& p) {
  return "(" + std::to_string(p.genus) + ";" + triple_string(p.k) + ")";
}

std::string to_string(const RelTrisectionParams& p) {
  return "(" + std::to_string(p.genus) + ",(" + triple_string(p.k) + ");" +
         std::to_string(p.page_genus) + "," + std::to_string(p.boundary_components) + ")";
}

ValidationReport validate_params(const TrisectionParams& p) {
  ValidationReport r;
  if (p.genus < 0) r.violations.push_back("g < 0");
  for (int i = 0; i < 3; ++i) {
    if (p.k[i] < 0) r.violations.push_back(sector_name(i) + " < 0");
    if (p.k[i] > p.genus) r.violations.push_back(sector_name(i) + " > g");
  }
  return r;
}

ValidationReport validate_params(const RelTrisectionParams& p) {
  ValidationReport r;
  if (p.genus < 0) r.violations.push_back("g < 0");
  if (p.page_genus < 0) r.violations.push_back("p < 0");
  if (p.genus < p.page_genus) r.violations.push_back("g < p");
  if (p.boundary_components < 1) r.violations.push_back("b < 1");
  const int bound = p.genus + p.boundary_components - 1;
  for (int i = 0; i < 3; ++i) {
    if (p.k[i] < 0) r.violations.push_back(sector_name(i) + " < 0");
    if (p.k[i] > bound) r.violations.push_back(sector_name(i) + " > g + b - 1");
  }
  return r;
}

ValidationReport validate_params(const Params& p) {
  return std::visit([](const auto& v) { return validate_params(v); }, p);
}

int euler_char_closed(const TrisectionParams& p) {
  require_valid(validate_params(p), "euler_char_closed");
  return 2 + p.genus - (p.k[0] + p.k[1] + p.k[2]);
}

int euler_char_relative(const RelTrisectionParams& p) {
  require_valid(validate_params(p), "euler_char_relative");
  const int sectors = 3 - (p.k[0] + p.k[1] + p.k[2]);
  const int compression_body = 2 - p.genus - p.page_genus - p.boundary_components;
  const int central = 2 - 2 * p.genus - p.boundary_components;
  return sectors - 3 * compression_body + central;
}

TrisectionParams connected_sum(const TrisectionParams& a, const TrisectionParams& b) {
  require_valid(validate_params(a), "connected_sum");
  require_valid(validate_params(b), "connected_sum");
  TrisectionParams out{a.genus + b.genus, {}};
  for (int i = 0; i < 3; ++i) out.k[i] = a.k[i] + b.k[i];
  return out;
}

RelTrisectionParams connected_sum(const RelTrisectionParams& a, const TrisectionParams& b) {
  require_valid(validate_params(a), "connected_sum");
  require_valid(validate_params(b), "connected_sum");
  RelTrisectionParams out = a;
  out.genus += b.genus;
  for (int i = 0; i < 3; ++i) out.k[i] += b.k[i];
  return out;
}

namespace {
TrisectionParams unbalanced_s4(Sector s) {
  TrisectionParams t{1, {0, 0, 0}};
  t.k[s - 1] = 1;
  return t;
}
}  // namespace

TrisectionParams stabilize(const TrisectionParams& p, Sector s) {
  require_sector(s);
  return connected_sum(p, unbalanced_s4(s));
}

RelTrisectionParams stabilize(const RelTrisectionParams& p, Sector s) {
  require_sector(s);
  return connected_sum(p, unbalanced_s4(s));
}

Params stabilize(const Params& p, Sector s) {
  return std::visit([s](const auto& v) -> Params { return stabilize(v, s); }, p);
}

namespace {
std::optional<Triple> delta_of(int g_target, const Triple& k_target, int g_base,
                               const Triple& k_base) {
  Triple d{};
  int total = 0;
  for (int i = 0; i < 3; ++i) {
    d[i] = k_target[i] - k_base[i];
    if (d[i] < 0) return std::nullopt;
    total += d[i];
  }
  if (total != g_target - g_base) return std::nullopt;
  return d;
}
}  // namespace

std::optional<Triple> stabilization_delta(const TrisectionParams& target,
                                          const TrisectionParams& base) {
  require_valid(validate_params(target), "stabilization_delta");
  require_valid(validate_params(base), "stabilization_delta");
  return delta_of(target.genus, target.k, base.genus, base.k);
}

std::optional<Triple> stabilization_delta(const RelTrisectionParams& target,
                                          const RelTrisectionParams& base) {
  require_valid(validate_params(target), "stabilization_delta");
  require_valid(validate_params(base), "stabilization_delta");
  if (target.page_genus != base.page_genus ||
      target.boundary_components != base.boundary_components) {
    return std::nullopt;
  }
  return delta_of(target.genus, target.k, base.genus, base.k);
}

std::optional<Triple> stabilization_delta(const Params& target, const Params& base) {
  if (target.index() != base.index()) {
    throw std::invalid_argument("stabilization_delta: closed and relative params mixed");
  }
  if (const auto* t = std::get_if<TrisectionParams>(&target)) {
    return stabilization_delta(*t, std::get<TrisectionParams>(base));
  }
  return stabilization_delta(std::get<RelTrisectionParams>(target),
                             std::get<RelTrisectionParams>(base));
}

// ---------------------------------------------------------------------------

std::int64_t intersection_pairing(const HomologyClass& u, const HomologyClass& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) {
    throw std::invalid_argument("intersection_pairing: classes of different genus");
  }
  std::int64_t s = 0;
  for (std::size_t i = 0; i < u.size(); i += 2) {
    s += u[i] * v[i + 1] - u[i + 1] * v[i];
  }
  return s;
}

ValidationReport validate_diagram(const TrisectionDiagram& d) {
  ValidationReport r;
  if (d.genus < 0) {
    r.violations.push_back("g < 0");
    return r;
  }
  if (d.boundary_components < 0) r.violations.push_back("boundary_components < 0");
  const std::size_t dim = 2 * static_cast<std::size_t>(d.genus);
  for (int s = 0; s < 3; ++s) {
    const auto& cs = d.cut_systems[s];
    const std::string name = "cut system " + std::to_string(s + 1);
    if (d.boundary_components == 0 && cs.size() != static_cast<std::size_t>(d.genus)) {
      r.violations.push_back(name + " has " + std::to_string(cs.size()) + " curves, expected g");
    }
    if (cs.size() > static_cast<std::size_t>(d.genus)) {
      r.violations.push_back(name + " has more than g curves");
    }
    bool shapes_ok = true;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (cs[i].size() != dim) {
        r.violations.push_back(name + " curve " + std::to_string(i + 1) + " not in Z^2g");
        shapes_ok = false;
        continue;
      }
      if (gcd_of(cs[i]) != 1) {
        r.violations.push_back(name + " curve " + std::to_string(i + 1) + " not primitive");
      }
    }
    if (!shapes_ok) continue;
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        if (intersection_pairing(cs[i], cs[j]) != 0) {
          r.violations.push_back(name + " curves " + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + " intersect algebraically");
        }
      }
    if (!cs.empty() && smith_normal_form(IntMatrix::from_rows(cs)).rank != cs.size()) {
      r.violations.push_back(name + " is not linearly independent");
    }
  }
  return r;
}

TrisectionDiagram connected_sum(const TrisectionDiagram& a, const TrisectionDiagram& b) {
  require_valid(validate_diagram(a), "connected_sum");
  require_valid(validate_diagram(b), "connected_sum");
  TrisectionDiagram out;
  out.genus = a.genus + b.genus;
  out.boundary_components = a.boundary_components + b.boundary_components;
  const std::size_t dim = 2 * static_cast<std::size_t>(out.genus);
  const std::size_t shift = 2 * static_cast<std::size_t>(a.genus);
  for (int s = 0; s < 3; ++s) {
    for (const auto& c : a.cut_systems[s]) {
      HomologyClass v(dim, 0);
      std::copy(c.begin(), c.end(), v.begin());
      out.cut_systems[s].push_back(std::move(v));
    }
    for (const auto& c : b.cut_systems[s]) {
      HomologyClass v(dim, 0);
      std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(shift));
      out.cut_systems[s].push_back(std::move(v));
    }
  }
  return out;
}

HeegaardHomology heegaard_h1(const CutSystem& a, const CutSystem& b, int genus) {
  const std::size_t dim = 2 * static_cast<std::size_t>(genus);
  if (a.size() != b.size()) throw std::invalid_argument("heegaard_h1: cut systems differ in size");
  for (const auto* cs : {&a, &b})
    for (const auto& c : *cs)
      if (c.size() != dim) throw std::invalid_argument("heegaard_h1: genus mismatch");

  HeegaardHomology h;
  h.pairing = IntMatrix(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) h.pairing(i, j) = intersection_pairing(a[i], b[j]);
  h.invariant_factors = smith_normal_form(h.pairing).invariant_factors;
  h.group = cokernel(h.pairing);
  return h;
}

std::array<HeegaardHomology, 3> boundary_homology(const TrisectionDiagram& d) {
  require_valid(validate_diagram(d), "boundary_homology");
  return {heegaard_h1(d.cut_systems[0], d.cut_systems[1], d.genus),
          heegaard_h1(d.cut_systems[1], d.cut_systems[2], d.genus),
          heegaard_h1(d.cut_systems[2], d.cut_systems[0], d.genus)};
}

TrisectionDiagram unbalanced_s4_diagram(Sector s) {
  require_sector(s);
  TrisectionDiagram d;
  d.genus = 1;
  const HomologyClass parallel{1, 0};
  const HomologyClass dual{0, 1};
  d.cut_systems[s - 1] = {parallel};
  d.cut_systems[next_sector(s) - 1] = {parallel};
  d.cut_systems[prev_sector(s) - 1] = {dual};
  return d;
}

TrisectionDiagram normalize(const TrisectionDiagram& d) {
  TrisectionDiagram out = d;
  for (auto& cs : out.cut_systems) {
    for (auto& c : cs) {
      auto first = std::find_if(c.begin(), c.end(), [](std::int64_t x) { return x != 0; });
      if (first != c.end() && *first < 0) {
        for (auto& x : c) x = -x;
      }
    }
    std::sort(cs.begin(), cs.end());
  }
  return out;
}

SpineEncoding make_spine(const TrisectionDiagram& d) { return {d, normalize(d)}; }

bool spine_equal(const SpineEncoding& a, const SpineEncoding& b) {
  return a.canonical_form == b.canonical_form;
}

}  // namespace tw
