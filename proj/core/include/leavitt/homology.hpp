#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "leavitt/bimodule.hpp"
#include "leavitt/certificate.hpp"
#include "leavitt/lpa.hpp"
#include "leavitt/module.hpp"

namespace leavitt {

/// Vertex-type generators e_i z(p, q) of every pair with l(p) + l(q) <= N, in all degrees.
/// Hom tables are stored on these.
struct HomWindow {
  Quiver quiver;
  int N = 0;
  std::vector<BasisVector> generators;

  HomWindow(Quiver q, int bound);
  /// l(p) + l(q) <= N - 1: the differential of the generator stays in the table.
  bool is_interior(const BasisVector& v) const { return v.pair.total_length() <= N - 1; }
};

/// An A-linear map of degree n on the complex, given by its values on vertex-type
/// generators; the value on a z is a . value(e_i z). Generators missing from the table map
/// to zero.
class HomElement {
 public:
  explicit HomElement(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<BasisVector, ModuleElement>& values() const { return values_; }
  void set(const BasisVector& generator, ModuleElement value);

  ModuleElement apply(const Quiver& q, const BasisVector& v) const;
  ModuleElement apply(const Quiver& q, const ModuleElement& m) const;

  /// Generators whose images are not of the shape allowed for A-linear maps out of P_i:
  /// a vertex-type e_i z or an arrow-type g z with t(g) = i.
  std::vector<BasisVector> shape_violations(const Quiver& q) const;

  HomElement& operator+=(const HomElement& other);
  friend bool operator==(const HomElement&, const HomElement&) = default;

 private:
  int degree_;
  std::map<BasisVector, ModuleElement> values_;
};

/// r_b(v) = (-1)^{n |v|} v . b tabulated on the window; throws std::domain_error unless b is
/// zero or homogeneous of degree n.
HomElement rho(const RightAction& action, const LpaElement& b, int n, const HomWindow& w);

/// D(f) = delta f - (-1)^{|f|} f delta, tabulated on the window generators.
HomElement coboundary(const HomWindow& w, const HomElement& f);

/// Deterministic random A-linear map of degree n supported on generators with
/// l(p) + l(q) <= support_bound, with values inside the window.
HomElement random_hom(const HomWindow& w, int n, int support_bound, std::uint64_t seed);

/// Components of a degree-n map y:
/// y(e_i z(p, q)) = phi(y_(p,q)) + sum over arrows g into i of phi_g(mu^g_(p,q)).
struct CocycleDecomposition {
  int degree = 0;
  std::map<AssociatedPair, LpaElement> y;
  std::map<AssociatedPair, std::map<ArrowIndex, LpaElement>> mu;
  Certificate certificate;

  const LpaElement& y_at(const AssociatedPair& pair) const;
  LpaElement mu_at(const AssociatedPair& pair, ArrowIndex g) const;
};

CocycleDecomposition decompose_cocycle(const LeavittAlgebra& b, const HomElement& y, const HomWindow& w);

struct ExtractedX {
  LpaElement x;
  Certificate certificate;
};

/// x = sum over vertices j of y_(e_j, e_j), after checking the two recursions tying
/// neighbouring components and the closed form y_(p,q) = (-1)^{nl} (p^op)* q^op x.
ExtractedX extract_x(const LeavittAlgebra& b, const CocycleDecomposition& d, const HomWindow& w);

struct CocycleCertificate {
  int degree = 0;
  LpaElement x;
  HomElement h;
  Certificate certificate;

  nlohmann::ordered_json to_json(const Quiver& q) const;
};

/// Builds theta by the double recursion, sets h(e_i z) = phi(theta) and h(a z) = phi_a(theta),
/// and checks y - rho(x) = delta h - (-1)^{n-1} h delta on every interior basis vector.
CocycleCertificate build_homotopy(const RightAction& action, const HomElement& y, const CocycleDecomposition& d,
                                  const LpaElement& x, const HomWindow& w);

/// For random h of degree n - 1 supported on interior generators, D(h) maps every interior
/// generator into the kernel of the differential.
Certificate verify_coboundary_lemma(const HomWindow& w, int n, std::uint64_t seed, int samples);

/// rho(e_i) fixes e_i z(e_i, e_i), which is not a cycle, so its class is nonzero; rho is
/// injective on the windowed normal terms of each degree in [n_min, n_max].
Certificate verify_embedding(const RightAction& action, const HomWindow& w, int n_min, int n_max);

struct QuasiBalancedOptions {
  int n_min = -2;
  int n_max = 2;
  std::uint64_t seed = 1;
  int cocycles = 50;
  Field field = Field::rationals();
};

/// Per degree: injectivity of rho, the round trip extract_x(rho(x)) = x over all windowed
/// normal terms, and homotopy certificates for sampled cocycles rho(x0) + D(h0).
Certificate quasi_balanced_report(const RightAction& action, const HomWindow& w, const QuasiBalancedOptions& options);

}  // namespace leavitt
