#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tw/smith.hpp"

namespace tw {

/// Sector index in {1,2,3}; arithmetic is cyclic.
using Sector = int;

inline Sector next_sector(Sector s) { return s % 3 + 1; }
inline Sector prev_sector(Sector s) { return (s + 1) % 3 + 1; }
void require_sector(Sector s);

using Triple = std::array<int, 3>;

/// Closed (g; k1, k2, k3) trisection invariants.
struct TrisectionParams {
  int genus = 0;
  Triple k{0, 0, 0};
  friend bool operator==(const TrisectionParams&, const TrisectionParams&) = default;
};

/// Relative (g, k1, k2, k3; p, b) trisection invariants.
struct RelTrisectionParams {
  int genus = 0;
  Triple k{0, 0, 0};
  int page_genus = 0;
  int boundary_components = 1;
  friend bool operator==(const RelTrisectionParams&, const RelTrisectionParams&) = default;
};

using Params = std::variant<TrisectionParams, RelTrisectionParams>;

std::string to_string(const TrisectionParams& p);
std::string to_string(const RelTrisectionParams& p);

/// The standard (0,0;0,1) relative trisection of B^4.
inline RelTrisectionParams standard_b4() { return RelTrisectionParams{0, {0, 0, 0}, 0, 1}; }

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_params(const TrisectionParams& p);
ValidationReport validate_params(const RelTrisectionParams& p);
ValidationReport validate_params(const Params& p);

/// chi(X) of a closed trisected 4-manifold. Throws on invalid params.
int euler_char_closed(const TrisectionParams& p);

/// chi(X) of a relatively trisected 4-manifold from sectors, compression
/// bodies and the bounded central surface. Throws on invalid params.
int euler_char_relative(const RelTrisectionParams& p);

TrisectionParams connected_sum(const TrisectionParams& a, const TrisectionParams& b);

/// Interior connected sum of a relative trisection with a closed one.
RelTrisectionParams connected_sum(const RelTrisectionParams& a, const TrisectionParams& b);

TrisectionParams stabilize(const TrisectionParams& p, Sector s);
RelTrisectionParams stabilize(const RelTrisectionParams& p, Sector s);
Params stabilize(const Params& p, Sector s);

/// Per-sector stabilization counts taking base to target, if target is an
/// iterated stabilization of base.
std::optional<Triple> stabilization_delta(const TrisectionParams& target,
                                          const TrisectionParams& base);
std::optional<Triple> stabilization_delta(const RelTrisectionParams& target,
                                          const RelTrisectionParams& base);
/// Throws std::invalid_argument when target and base are of different kinds.
std::optional<Triple> stabilization_delta(const Params& target, const Params& base);

// ---------------------------------------------------------------------------
// Homological diagrams

/// A curve on the central surface, recorded by its class in H_1 = Z^{2g} in
/// the symplectic basis (a_1, b_1, ..., a_g, b_g).
using HomologyClass = std::vector<std::int64_t>;
using CutSystem = std::vector<HomologyClass>;

/// Algebraic intersection number <u, v> with <a_i, b_i> = 1.
std::int64_t intersection_pairing(const HomologyClass& u, const HomologyClass& v);

struct TrisectionDiagram {
  int genus = 0;
  int boundary_components = 0;
  std::array<CutSystem, 3> cut_systems;
  friend bool operator==(const TrisectionDiagram&, const TrisectionDiagram&) = default;
};

ValidationReport validate_diagram(const TrisectionDiagram& d);

/// Block sum of two diagrams along a separating curve.
TrisectionDiagram connected_sum(const TrisectionDiagram& a, const TrisectionDiagram& b);

/// Invariant factors (SNF diagonal, in order) plus the resulting group.
struct HeegaardHomology {
  IntMatrix pairing;
  std::vector<std::int64_t> invariant_factors;
  AbelianGroup group;
};

/// H_1 of the Heegaard-split 3-manifold H_A cup H_B.
HeegaardHomology heegaard_h1(const CutSystem& a, const CutSystem& b, int genus);

/// H_1 of Y_lambda = H_lambda cup H_{lambda+1} for lambda = 1,2,3.
std::array<HeegaardHomology, 3> boundary_homology(const TrisectionDiagram& d);

/// Genus-1 diagram of the (1; e_s) trisection of S^4: alpha_s and alpha_{s+1}
/// parallel, the remaining curve dual to both.
TrisectionDiagram unbalanced_s4_diagram(Sector s);

struct SpineEncoding {
  TrisectionDiagram diagram;
  TrisectionDiagram canonical_form;
};

TrisectionDiagram normalize(const TrisectionDiagram& d);
SpineEncoding make_spine(const TrisectionDiagram& d);

/// Sufficient (not necessary) test for the trisected manifolds to be
/// diffeomorphic.
bool spine_equal(const SpineEncoding& a, const SpineEncoding& b);

}  // namespace tw
