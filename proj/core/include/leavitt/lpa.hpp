#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "leavitt/certificate.hpp"
#include "leavitt/combination.hpp"
#include "leavitt/quiver.hpp"
#include "leavitt/scalar.hpp"

namespace leavitt {

/// Basis term g* r of L_k(Q^op). Both paths live in Q^op and share their end vertex;
/// the term equals e_{s(g)} g* r e_{s(r)}.
struct NormalTerm {
  Path ghost;
  Path real;

  int degree() const { return real.length() - ghost.length(); }
  int total_length() const { return ghost.length() + real.length(); }

  friend std::strong_ordering operator<=>(const NormalTerm&, const NormalTerm&) = default;
  friend bool operator==(const NormalTerm&, const NormalTerm&) = default;
};

/// Finite combination of normal terms.
using LpaElement = Combination<NormalTerm>;

enum class GeneratorKind { kVertex, kArrow, kGhost };

/// B = L_k(Q^op) for a quiver Q without sources, with special arrows the reverses of
/// the associated arrows of Q.
class LeavittAlgebra {
 public:
  explicit LeavittAlgebra(Quiver q);

  const Quiver& quiver() const { return quiver_; }
  const OppositeQuiver& opposite() const { return op_; }

  /// (p, q) -> (p^op)* q^op. Throws QuiverError if (p, q) is not an associated pair.
  NormalTerm chi(const AssociatedPair& pair) const;
  AssociatedPair chi_inv(const NormalTerm& t) const;

  /// Path validity, matching end vertices, and the junction condition.
  bool is_normal(const NormalTerm& t) const;

  LpaElement vertex(VertexIndex v) const;
  /// The generator a^op.
  LpaElement arrow(ArrowIndex a) const;
  /// The generator (a^op)*.
  LpaElement ghost(ArrowIndex a) const;
  LpaElement one() const;
  /// Looks up a generator by vertex or arrow id; throws QuiverError on unknown ids.
  LpaElement generator(GeneratorKind kind, std::string_view id) const;

  LpaElement multiply(const LpaElement& x, const LpaElement& y) const;

  /// Normal terms of the given degree with l(ghost) + l(real) <= length_bound,
  /// enumerated directly in Q^op.
  std::vector<NormalTerm> basis_terms(int degree, int length_bound) const;

  LpaElement random_element(std::uint64_t seed, int min_degree, int max_degree, int length_bound,
                            int term_count, const Field& field = Field::rationals()) const;

 private:
  void multiply_terms(const NormalTerm& x, const NormalTerm& y, const Scalar& c, LpaElement& out) const;
  void reduce_into(Path ghost, Path real, Scalar c, LpaElement& out) const;

  Quiver quiver_;
  OppositeQuiver op_;
  std::vector<std::vector<ArrowIndex>> op_t_sets_;
};

/// The defining relations of L_k(Q^op): vertex idempotents, endpoint relations, and the
/// Cuntz-Krieger relations CK1 and CK2. Both sides are reduced by multiply, and every
/// product of two generators must be normal.
Certificate verify_lpa_relations(const LeavittAlgebra& b);

/// (x y) z = x (y z) on random triples, with every product in normal form.
Certificate verify_lpa_associativity(const LeavittAlgebra& b, std::uint64_t seed, int samples, int length_bound,
                                     const Field& field = Field::rationals());

/// chi maps the pairs of each degree in [l_min, l_max] with l(p) + l(q) <= N bijectively onto
/// the normal terms of that degree and length bound, and chi_inv inverts it.
Certificate verify_chi_bijection(const LeavittAlgebra& b, int l_min, int l_max, int N);

}  // namespace leavitt
