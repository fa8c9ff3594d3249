#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leavitt/certificate.hpp"
#include "leavitt/linalg.hpp"
#include "leavitt/module.hpp"

namespace leavitt {

enum class DifferentialRule {
  kDelta,       ///< the differential of the complex
  kDeltaTilde,  ///< the cokernel differential: zero on e_i z(p, q) with l(p) = 1
};

ModuleElement apply_rule(const Quiver& q, DifferentialRule rule, const BasisVector& v);

/// Finite truncation of the complex (or of a sub- or quotient complex): all kept basis
/// vectors with degree in [l_min, l_max] and l(p) + l(q) <= N, plus the matrices of the
/// differential between consecutive degrees.
class ComplexWindow {
 public:
  using Selector = std::function<bool(const BasisVector&)>;

  ComplexWindow(Quiver q, WindowSpec spec, std::string label = "P", DifferentialRule rule = DifferentialRule::kDelta,
                const Selector& keep = {});

  const Quiver& quiver() const { return quiver_; }
  const WindowSpec& spec() const { return spec_; }
  const std::string& label() const { return label_; }
  DifferentialRule rule() const { return rule_; }
  int l_min() const { return spec_.l_min; }
  int l_max() const { return spec_.l_max; }
  int N() const { return spec_.N; }

  /// Empty for degrees outside the window.
  const std::vector<BasisVector>& basis(int l) const;
  /// Position of v in basis(l), or -1.
  int index(int l, const BasisVector& v) const;
  /// Matrix of the differential from degree l to l + 1, for l_min <= l < l_max.
  const SparseMatrix& matrix(int l) const;
  void replace_matrix(int l, SparseMatrix m);
  /// Image terms whose total length exceeds N, as (column, vector).
  const std::vector<std::pair<int, BasisVector>>& overflow(int l) const;
  /// In-window image terms that this window does not keep (closure violations).
  const std::vector<std::pair<int, BasisVector>>& escapes(int l) const;

  /// l(p) + l(q) <= N - 2: image and double image stay in the window.
  bool is_interior(const BasisVector& v) const { return v.pair.total_length() <= spec_.N - 2; }
  /// The image under the differential lies in the window, and so do the explicit
  /// preimage witnesses used by the condition (W) check.
  bool is_complete(const BasisVector& v) const;

  ModuleElement image(const BasisVector& v) const { return apply_rule(quiver_, rule_, v); }
  /// Throws std::out_of_range if m has a term outside basis(l).
  SparseVector coordinates(int l, const ModuleElement& m) const;
  ModuleElement element(int l, const SparseVector& x) const;

 private:
  Quiver quiver_;
  WindowSpec spec_;
  std::string label_;
  DifferentialRule rule_;
  std::map<int, std::vector<BasisVector>> basis_;
  std::map<int, std::map<BasisVector, int>> index_;
  std::map<int, SparseMatrix> matrices_;
  std::map<int, std::vector<std::pair<int, BasisVector>>> overflow_;
  std::map<int, std::vector<std::pair<int, BasisVector>>> escapes_;
};

ComplexWindow build_window(const Quiver& q, int l_min, int l_max, int N);

/// Index classes into basis(l). The b0/b1/b2 split is the domain partition, the
/// primed split the codomain partition of the same basis.
struct BasisPartition {
  std::vector<int> b0;
  std::vector<int> b1;
  std::vector<int> b2;
  std::vector<int> b0_prime;
  std::vector<int> b1_prime;
};

BasisPartition partition_basis(const ComplexWindow& w, int l);

/// Domain classes index columns of f, codomain classes index rows.
struct WPartition {
  std::vector<int> b0;
  std::vector<int> b1;
  std::vector<int> b2;
  std::vector<int> b0_prime;
  std::vector<int> b1_prime;
};

using IndexLabeler = std::function<std::string(bool is_row, int index)>;

/// Checks (W1)-(W3) for f and then the kernel and image bases they predict, by rank.
Certificate check_condition_W(const SparseMatrix& f, const WPartition& part, const IndexLabeler& label = {});

/// Condition (W) for the differential at degree l restricted to complete columns.
Certificate check_delta_condition_W(const ComplexWindow& w, int l);

Certificate verify_delta_squared(const ComplexWindow& w);
Certificate verify_acyclicity(const ComplexWindow& w);

struct SubWindowResult {
  ComplexWindow window;
  Certificate certificate;
};

SubWindowResult subcomplex_K(const ComplexWindow& w);
SubWindowResult cokernel_C(const ComplexWindow& w);
SubWindowResult diagonal_C_n(const ComplexWindow& w, int n);
/// `cokernel` must come from cokernel_C (possibly with a replaced matrix).
Certificate verify_decomposition(const ComplexWindow& cokernel);

}  // namespace leavitt
