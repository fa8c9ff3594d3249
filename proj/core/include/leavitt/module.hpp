#pragma once

#include <compare>

#include "leavitt/combination.hpp"
#include "leavitt/quiver.hpp"

namespace leavitt {

/// Basis vector of the complex: e_i z(p,q) when arrow < 0, otherwise a z(p,q) with
/// s(a) = i, where i = t(p). Together they span one copy of P_i = A e_i per pair.
struct BasisVector {
  AssociatedPair pair;
  ArrowIndex arrow = -1;

  static BasisVector vertex_type(AssociatedPair pair) { return BasisVector{std::move(pair), -1}; }
  static BasisVector arrow_type(ArrowIndex a, AssociatedPair pair) { return BasisVector{std::move(pair), a}; }

  bool is_vertex_type() const { return arrow < 0; }
  VertexIndex vertex() const { return pair.vertex(); }
  int degree() const { return pair.degree(); }

  friend std::strong_ordering operator<=>(const BasisVector&, const BasisVector&) = default;
  friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

using ModuleElement = Combination<BasisVector>;

bool is_valid_vector(const Quiver& q, const BasisVector& v);

/// The differential: arrow-type vectors go to 0; e_i z(b p', q) goes to b z(p', q);
/// e_i z(e_i, q) goes to the sum over arrows b into i of b z(e_{s(b)}, q b).
ModuleElement differential(const Quiver& q, const BasisVector& v);
ModuleElement differential(const Quiver& q, const ModuleElement& m);

/// Left multiplication by an arrow of A = kQ/J^2: a . e_i z = delta(s(a), i) a z,
/// and a . b z = 0.
ModuleElement left_multiply(const Quiver& q, ArrowIndex a, const ModuleElement& m);

/// The unit section: sum of e_i z(e_i, e_i) over all vertices.
ModuleElement unit_section(const Quiver& q);

}  // namespace leavitt
