#include "leavitt/bimodule.hpp"

#include <map>
#include <random>
#include <set>

#include "leavitt/literal.hpp"

namespace leavitt {

RightAction::RightAction(LeavittAlgebra algebra, ActionFlavor flavor) : algebra_(std::move(algebra)), flavor_(flavor) {}

ModuleElement RightAction::vertex(const ModuleElement& m, VertexIndex j) const {
  ModuleElement out;
  for (const auto& [v, c] : m.terms()) {
    if (v.pair.q.end == j) out.add_term(v, c);
  }
  return out;
}

ModuleElement RightAction::arrow(const ModuleElement& m, ArrowIndex a) const {
  const Quiver& q = quiver();
  Scalar tail_sign = flavor_ == ActionFlavor::kSignFlipped ? Scalar(1) : Scalar(-1);
  ModuleElement out;
  for (const auto& [v, c] : m.terms()) {
    const Path& p = v.pair.p;
    const Path& qq = v.pair.q;
    auto with_pair = [&](Path np, Path nq) { return BasisVector{AssociatedPair{std::move(np), std::move(nq)}, v.arrow}; };
    if (qq.is_trivial() && !p.is_trivial() && p.first_arrow() == a && q.is_associated(a)) {
      Path tilde = truncations(q, p).second;
      out.add_term(with_pair(tilde, q.trivial_path(q.target(a))), c);
      for (ArrowIndex b : t_set(q, a)) {
        Path bp = q.arrow_path(b);
        out.add_term(with_pair(q.compose(tilde, bp), bp), tail_sign * c);
      }
    } else if (q.source(a) == qq.end) {
      out.add_term(with_pair(p, q.compose(q.arrow_path(a), qq)), c);
    }
  }
  return out;
}

ModuleElement RightAction::ghost(const ModuleElement& m, ArrowIndex a) const {
  const Quiver& q = quiver();
  ModuleElement out;
  for (const auto& [v, c] : m.terms()) {
    const Path& p = v.pair.p;
    const Path& qq = v.pair.q;
    if (!qq.is_trivial()) {
      if (qq.last_arrow() == a) out.add_term(BasisVector{AssociatedPair{p, truncations(q, qq).first}, v.arrow}, c);
    } else if (p.start == q.target(a)) {
      AssociatedPair pair{q.compose(p, q.arrow_path(a)), q.trivial_path(q.source(a))};
      out.add_term(BasisVector{std::move(pair), v.arrow}, c);
    }
  }
  return out;
}

ModuleElement RightAction::act_term(const ModuleElement& m, const NormalTerm& t) const {
  if (t.ghost.is_trivial() && t.real.is_trivial()) return vertex(m, t.ghost.start);
  ModuleElement cur = m;
  for (auto it = t.ghost.arrows.rbegin(); it != t.ghost.arrows.rend() && !cur.is_zero(); ++it) cur = ghost(cur, *it);
  for (auto it = t.real.arrows.begin(); it != t.real.arrows.end() && !cur.is_zero(); ++it) cur = arrow(cur, *it);
  return cur;
}

ModuleElement RightAction::act(const ModuleElement& m, const LpaElement& b) const {
  ModuleElement out;
  for (const auto& [t, c] : b.terms()) {
    ModuleElement part = act_term(m, t);
    part *= c;
    out += part;
  }
  return out;
}

ModuleElement RightAction::act(const BasisVector& v, const LpaElement& b) const {
  return act(ModuleElement::from_term(v), b);
}

ModuleElement phi(const LeavittAlgebra& b, const LpaElement& x) {
  ModuleElement out;
  for (const auto& [t, c] : x.terms()) out.add_term(BasisVector::vertex_type(b.chi_inv(t)), c);
  return out;
}

ModuleElement phi_beta(const LeavittAlgebra& b, ArrowIndex beta, const LpaElement& x) {
  ModuleElement out;
  for (const auto& [t, c] : x.terms()) {
    AssociatedPair pair = b.chi_inv(t);
    if (pair.p.end == b.quiver().source(beta)) out.add_term(BasisVector::arrow_type(beta, std::move(pair)), c);
  }
  return out;
}

namespace {

std::vector<BasisVector> window_vectors(const ComplexWindow& w) {
  std::vector<BasisVector> out;
  for (int l = w.l_min(); l <= w.l_max(); ++l) out.insert(out.end(), w.basis(l).begin(), w.basis(l).end());
  return out;
}

/// Random combinations of up to three basis vectors of one window degree.
std::vector<ModuleElement> random_module_elements(const ComplexWindow& w, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::vector<ModuleElement> out;
  std::uniform_int_distribution<int> degree(w.l_min(), w.l_max());
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int s = 0; s < samples; ++s) {
    const auto& basis = w.basis(degree(rng));
    if (basis.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    ModuleElement m;
    for (int k = 0; k < 3; ++k) m.add_term(basis[pick(rng)], coeff(rng));
    if (!m.is_zero()) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

Certificate verify_relations(const RightAction& action, const ComplexWindow& w, std::uint64_t seed, int samples) {
  const Quiver& q = action.quiver();
  Certificate cert("bimodule-relations", "the generator actions satisfy the defining relations of L_k(Q^op)", q.name(),
                   w.spec());
  std::vector<ModuleElement> inputs;
  for (const BasisVector& v : window_vectors(w)) inputs.push_back(ModuleElement::from_term(v));
  std::size_t basis_count = inputs.size();
  for (ModuleElement& m : random_module_elements(w, seed, samples)) inputs.push_back(std::move(m));

  long checks = 0;
  auto check = [&](bool ok, const char* relation, const ModuleElement& m) {
    ++checks;
    cert.require(ok, [&] { return std::string("relation ") + relation + " fails on " + format_element(q, m); });
  };
  for (const ModuleElement& m : inputs) {
    for (VertexIndex j = 0; j < q.vertex_count(); ++j) {
      ModuleElement mj = action.vertex(m, j);
      for (VertexIndex k = 0; k < q.vertex_count(); ++k) {
        check(action.vertex(mj, k) == (j == k ? mj : ModuleElement{}), "idempotent", m);
      }
      ModuleElement sum;
      for (ArrowIndex a : q.incoming(j)) sum += action.arrow(action.ghost(m, a), a);
      check(sum == mj, "CK2", m);
    }
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      ModuleElement ma = action.arrow(m, a);
      ModuleElement mg = action.ghost(m, a);
      check(action.vertex(ma, q.target(a)) == ma && action.arrow(action.vertex(m, q.source(a)), a) == ma, "arrow-vertex", m);
      check(action.vertex(mg, q.source(a)) == mg && action.ghost(action.vertex(m, q.target(a)), a) == mg, "ghost-vertex", m);
      for (ArrowIndex b = 0; b < q.arrow_count(); ++b) {
        ModuleElement expected = a == b ? action.vertex(m, q.source(a)) : ModuleElement{};
        check(action.ghost(ma, b) == expected, "CK1", m);
      }
    }
  }
  cert.dimensions["basis_vectors"] = basis_count;
  cert.dimensions["random_elements"] = inputs.size() - basis_count;
  cert.dimensions["checks"] = checks;
  return cert;
}

Certificate verify_dg_compat(const RightAction& action, const ComplexWindow& w) {
  const Quiver& q = action.quiver();
  Certificate cert("bimodule-dg-compat", "the right action commutes with the differential", q.name(), w.spec());
  long checks = 0;
  for (const BasisVector& v : window_vectors(w)) {
    if (!w.is_interior(v)) continue;
    ModuleElement m = ModuleElement::from_term(v);
    ModuleElement dm = differential(q, m);
    auto check = [&](const ModuleElement& lhs, const ModuleElement& rhs, const std::string& generator) {
      ++checks;
      cert.require(lhs == rhs, [&] { return "differential and action by " + generator + " disagree on " + format_vector(q, v); });
    };
    for (VertexIndex j = 0; j < q.vertex_count(); ++j) {
      check(differential(q, action.vertex(m, j)), action.vertex(dm, j), "e(" + q.vertex_id(j) + ")");
    }
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      check(differential(q, action.arrow(m, a)), action.arrow(dm, a), q.arrow(a).id + "^op");
      check(differential(q, action.ghost(m, a)), action.ghost(dm, a), "(" + q.arrow(a).id + "^op)*");
    }
  }
  cert.dimensions["checks"] = checks;
  return cert;
}

namespace {

ModuleElement delta_phi_rhs(const LeavittAlgebra& b, const LpaElement& x) {
  ModuleElement out;
  for (ArrowIndex a = 0; a < b.quiver().arrow_count(); ++a) out += phi_beta(b, a, b.multiply(b.arrow(a), x));
  return out;
}

}  // namespace

Certificate verify_delta_phi(const LeavittAlgebra& b, const ComplexWindow& w, std::uint64_t seed, int samples) {
  const Quiver& q = b.quiver();
  Certificate cert("delta-phi", "delta(phi(b)) equals the sum of phi_a(a^op b) over all arrows a", q.name(), w.spec());
  long terms = 0;
  for (int l = w.l_min(); l <= w.l_max(); ++l) {
    for (const NormalTerm& t : b.basis_terms(l, w.N() - 1)) {
      ++terms;
      LpaElement x = LpaElement::from_term(t);
      cert.require(differential(q, phi(b, x)) == delta_phi_rhs(b, x),
                   [&] { return "identity fails on " + format_term(q, t); });
    }
  }
  for (int s = 0; s < samples; ++s) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(s));
    int l = std::uniform_int_distribution<int>(w.l_min(), w.l_max())(rng);
    LpaElement x = b.random_element(rng(), l, l, w.N() - 1, 3);
    cert.require(differential(q, phi(b, x)) == delta_phi_rhs(b, x),
                 [&] { return "identity fails on " + format_element(q, x); });
  }
  cert.dimensions["terms"] = terms;
  cert.dimensions["random_elements"] = samples;
  return cert;
}

Certificate verify_unit_section(const RightAction& action, const ComplexWindow& w) {
  const Quiver& q = action.quiver();
  const LeavittAlgebra& b = action.algebra();
  Certificate cert("unit-section", "the unit section acted on by (p^op)* q^op gives e_{t(p)} z(p, q)", q.name(),
                   w.spec());
  ModuleElement unit = unit_section(q);
  long pairs = 0;
  for (int l = w.l_min(); l <= w.l_max(); ++l) {
    for (const BasisVector& v : w.basis(l)) {
      if (!v.is_vertex_type()) continue;
      ++pairs;
      LpaElement x = LpaElement::from_term(b.chi(v.pair));
      cert.require(action.act(unit, x) == ModuleElement::from_term(v),
                   [&] { return "unit section fails on " + format_vector(q, v); });
      for (ArrowIndex beta = 0; beta < q.arrow_count(); ++beta) {
        Path e = q.trivial_path(q.source(beta));
        ModuleElement start = ModuleElement::from_term(BasisVector::arrow_type(beta, AssociatedPair{e, e}));
        ModuleElement expected;
        if (q.source(beta) == v.vertex()) expected.add_term(BasisVector::arrow_type(beta, v.pair), 1);
        cert.require(action.act(start, x) == expected, [&] {
          return "arrow section " + q.arrow(beta).id + " fails on " + format_vector(q, v);
        });
      }
    }
  }
  cert.dimensions["pairs"] = pairs;
  return cert;
}

Certificate verify_action_associativity(const RightAction& action, const ComplexWindow& w, std::uint64_t seed,
                                        int samples) {
  const Quiver& q = action.quiver();
  const LeavittAlgebra& b = action.algebra();
  Certificate cert("action-associativity", "m . (x y) = (m . x) . y, and phi is an injective right module map",
                   q.name(), w.spec());
  std::vector<BasisVector> vectors = window_vectors(w);
  std::mt19937_64 rng(seed);
  int bound = std::max(1, w.N() / 2);
  for (int s = 0; s < samples && !vectors.empty(); ++s) {
    LpaElement x = b.random_element(rng(), -bound, bound, bound, 2);
    LpaElement y = b.random_element(rng(), -bound, bound, bound, 2);
    LpaElement xy = b.multiply(x, y);
    const BasisVector& v = vectors[std::uniform_int_distribution<std::size_t>(0, vectors.size() - 1)(rng)];
    cert.require(action.act(v, xy) == action.act(action.act(v, x), y), [&] {
      return "action is not associative on " + format_vector(q, v) + " with x = " + format_element(q, x) +
             ", y = " + format_element(q, y);
    });
    cert.require(phi(b, xy) == action.act(phi(b, x), y), [&] {
      return "phi is not a right module map on x = " + format_element(q, x) + ", y = " + format_element(q, y);
    });
  }

  // phi sends distinct normal terms to distinct basis vectors, and so does phi_beta on
  // terms with t(p) = s(beta).
  long terms = 0;
  for (int l = w.l_min(); l <= w.l_max(); ++l) {
    std::set<BasisVector> seen;
    std::map<ArrowIndex, std::set<BasisVector>> seen_beta;
    for (const NormalTerm& t : b.basis_terms(l, w.N())) {
      ++terms;
      LpaElement x = LpaElement::from_term(t);
      ModuleElement image = phi(b, x);
      cert.require(image.size() == 1 && seen.insert(image.terms().begin()->first).second,
                   [&] { return "phi is not injective at " + format_term(q, t); });
      for (ArrowIndex beta = 0; beta < q.arrow_count(); ++beta) {
        if (b.chi_inv(t).p.end != q.source(beta)) continue;
        ModuleElement img = phi_beta(b, beta, x);
        cert.require(img.size() == 1 && seen_beta[beta].insert(img.terms().begin()->first).second,
                     [&] { return "phi_" + q.arrow(beta).id + " is not injective at " + format_term(q, t); });
      }
    }
  }
  cert.dimensions["samples"] = samples;
  cert.dimensions["terms"] = terms;
  return cert;
}

}  // namespace leavitt
