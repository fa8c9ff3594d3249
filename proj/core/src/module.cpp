#include "leavitt/module.hpp"

namespace leavitt {

bool is_valid_vector(const Quiver& q, const BasisVector& v) {
  if (!is_associated_pair(v.pair.p, v.pair.q, q)) return false;
  if (v.is_vertex_type()) return true;
  return v.arrow < q.arrow_count() && q.source(v.arrow) == v.vertex();
}

ModuleElement differential(const Quiver& q, const BasisVector& v) {
  ModuleElement out;
  if (!v.is_vertex_type()) return out;
  const Path& p = v.pair.p;
  const Path& qq = v.pair.q;
  if (!p.is_trivial()) {
    auto [hat, tilde] = truncations(q, p);
    out.add_term(BasisVector::arrow_type(p.last_arrow(), AssociatedPair{hat, qq}), 1);
    return out;
  }
  for (ArrowIndex b : q.incoming(p.end)) {
    Path e = q.trivial_path(q.source(b));
    out.add_term(BasisVector::arrow_type(b, AssociatedPair{e, q.compose(qq, q.arrow_path(b))}), 1);
  }
  return out;
}

ModuleElement differential(const Quiver& q, const ModuleElement& m) {
  ModuleElement out;
  for (const auto& [v, c] : m.terms()) {
    ModuleElement image = differential(q, v);
    for (const auto& [w, d] : image.terms()) out.add_term(w, c * d);
  }
  return out;
}

ModuleElement left_multiply(const Quiver& q, ArrowIndex a, const ModuleElement& m) {
  ModuleElement out;
  for (const auto& [v, c] : m.terms()) {
    if (v.is_vertex_type() && q.source(a) == v.vertex()) out.add_term(BasisVector::arrow_type(a, v.pair), c);
  }
  return out;
}

ModuleElement unit_section(const Quiver& q) {
  ModuleElement out;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    Path e = q.trivial_path(v);
    out.add_term(BasisVector::vertex_type(AssociatedPair{e, e}), 1);
  }
  return out;
}

}  // namespace leavitt
