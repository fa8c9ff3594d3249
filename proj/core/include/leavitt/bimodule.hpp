#pragma once

#include <cstdint>

#include "leavitt/certificate.hpp"
#include "leavitt/complex.hpp"
#include "leavitt/lpa.hpp"
#include "leavitt/module.hpp"

namespace leavitt {

enum class ActionFlavor {
  kStandard,
  kSignFlipped,  ///< negative control: the T(a) sum in the a^op action enters with + instead of -
};

/// The right action of B = L_k(Q^op) on the complex, defined on generators and extended
/// term by term. It never goes through multiplication in B.
class RightAction {
 public:
  explicit RightAction(LeavittAlgebra algebra, ActionFlavor flavor = ActionFlavor::kStandard);

  const LeavittAlgebra& algebra() const { return algebra_; }
  const Quiver& quiver() const { return algebra_.quiver(); }
  ActionFlavor flavor() const { return flavor_; }

  /// m . e_j keeps the vectors with t(q) = j.
  ModuleElement vertex(const ModuleElement& m, VertexIndex j) const;
  /// m . a^op.
  ModuleElement arrow(const ModuleElement& m, ArrowIndex a) const;
  /// m . (a^op)*.
  ModuleElement ghost(const ModuleElement& m, ArrowIndex a) const;
  /// m . b, applying for each term (p^op)* q^op the ghosts of p from the first arrow of p
  /// outward and then the arrows of q from the first arrow of q outward.
  ModuleElement act(const ModuleElement& m, const LpaElement& b) const;
  ModuleElement act(const BasisVector& v, const LpaElement& b) const;

 private:
  ModuleElement act_term(const ModuleElement& m, const NormalTerm& t) const;

  LeavittAlgebra algebra_;
  ActionFlavor flavor_;
};

/// phi((p^op)* q^op) = e_{t(p)} z(p, q), extended linearly.
ModuleElement phi(const LeavittAlgebra& b, const LpaElement& x);
/// phi_beta((p^op)* q^op) = beta z(p, q) when s(beta) = t(p), and 0 otherwise.
ModuleElement phi_beta(const LeavittAlgebra& b, ArrowIndex beta, const LpaElement& x);

/// The defining relations of L_k(Q^op) (vertex idempotents, endpoint relations, CK1 and
/// CK2) acting on every basis vector of the window and on `samples` random combinations.
Certificate verify_relations(const RightAction& action, const ComplexWindow& w, std::uint64_t seed, int samples);

/// delta(m . g) = delta(m) . g for every interior basis vector m and every generator g.
Certificate verify_dg_compat(const RightAction& action, const ComplexWindow& w);

/// delta(phi(b)) = sum over arrows a of phi_a(a^op b) for every normal term b with
/// l(ghost) + l(real) <= N - 1 and on `samples` random combinations.
Certificate verify_delta_phi(const LeavittAlgebra& b, const ComplexWindow& w, std::uint64_t seed, int samples);

/// The unit section times (p^op)* q^op is e_{t(p)} z(p, q), and beta z(e, e) times it is
/// delta(s(beta), t(p)) beta z(p, q), for every pair of the window.
Certificate verify_unit_section(const RightAction& action, const ComplexWindow& w);

/// Well-definedness: m . (x y) = (m . x) . y on random x, y and the window basis, plus
/// phi(x y) = phi(x) . y and injectivity of phi and phi_beta on windowed terms.
Certificate verify_action_associativity(const RightAction& action, const ComplexWindow& w, std::uint64_t seed,
                                        int samples);

}  // namespace leavitt
