#pragma once

#include <compare>
#include <map>
#include <vector>

#include "leavitt/certificate.hpp"
#include "leavitt/combination.hpp"
#include "leavitt/linalg.hpp"
#include "leavitt/quiver.hpp"

namespace leavitt {

/// Basis vector of the injective resolution: e_i# z(e_i, q) when arrow < 0, otherwise
/// a# z(e_i, q) with t(a) = i. These span copies of I_i = D(e_i A).
struct InjectiveVector {
  Path q;
  ArrowIndex arrow = -1;

  VertexIndex vertex() const { return q.start; }
  int degree() const { return q.length(); }
  bool is_vertex_type() const { return arrow < 0; }

  friend std::strong_ordering operator<=>(const InjectiveVector&, const InjectiveVector&) = default;
  friend bool operator==(const InjectiveVector&, const InjectiveVector&) = default;
};

using InjectiveElement = Combination<InjectiveVector>;

/// Generator of A = kQ/J^2 acting on the left: a vertex idempotent or an arrow.
struct AlgebraGenerator {
  bool is_arrow = false;
  int index = 0;
};

std::vector<AlgebraGenerator> algebra_generators(const Quiver& q);

/// Basis of D(A_A): u < |Q_0| is e_u#, otherwise (u - |Q_0|)#.
int dual_dimension(const Quiver& q);
/// Left action (a . u)(m) = u(m a) on the dual basis; returns -1 for zero.
int dual_left_action(const Quiver& q, const AlgebraGenerator& a, int u);
/// Right action (u . a)(m) = u(a m) on the dual basis; returns -1 for zero.
int dual_right_action(const Quiver& q, int u, const AlgebraGenerator& a);

InjectiveElement injective_left_action(const Quiver& q, const AlgebraGenerator& a, const InjectiveElement& m);
InjectiveElement injective_differential(const Quiver& q, const InjectiveVector& v);

/// The complex of injectives in degrees 0..L.
class InjectiveWindow {
 public:
  InjectiveWindow(Quiver q, int L, int N);

  const Quiver& quiver() const { return quiver_; }
  int L() const { return L_; }
  int N() const { return N_; }
  const std::vector<InjectiveVector>& basis(int l) const { return basis_.at(l); }
  int index(int l, const InjectiveVector& v) const;
  const SparseMatrix& matrix(int l) const { return matrices_.at(l); }

 private:
  Quiver quiver_;
  int L_;
  int N_;
  std::map<int, std::vector<InjectiveVector>> basis_;
  std::map<int, std::map<InjectiveVector, int>> index_;
  std::map<int, SparseMatrix> matrices_;
};

struct InjectiveResolution {
  InjectiveWindow window;
  Certificate certificate;
};

/// Builds the window and certifies exactness at 1..L-1, the kernel in degree 0 and
/// condition (W) for each differential with the vertex-type / arrow-type split.
InjectiveResolution build_M_resolution(const Quiver& q, int L, int N);

enum class IntertwinerControl {
  kNone,
  kSignFlippedDelta,  ///< negative control: use -delta in place of delta
};

/// Builds the maps from the trivial-p part of the complex into Hom_A(D(A_A), M^l) and
/// checks that they are A-linear isomorphisms intertwining the differentials.
Certificate nakayama_compare(const Quiver& q, int L, int N, IntertwinerControl control = IntertwinerControl::kNone);

}  // namespace leavitt
