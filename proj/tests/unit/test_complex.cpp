#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "leavitt/complex.hpp"
#include "leavitt/literal.hpp"

namespace leavitt {
namespace {

using fixtures::arrow;
using fixtures::path;

/// The two-case differential written out directly from its definition.
ModuleElement delta_oracle(const Quiver& q, const BasisVector& v) {
  ModuleElement out;
  if (!v.is_vertex_type()) return out;
  const Path& p = v.pair.p;
  const Path& qq = v.pair.q;
  if (!p.is_trivial()) {
    ArrowIndex b = p.last_arrow();
    Path rest{p.start, q.source(b), std::vector<ArrowIndex>(p.arrows.begin() + 1, p.arrows.end())};
    out.add_term(BasisVector::arrow_type(b, AssociatedPair{rest, qq}), 1);
    return out;
  }
  for (ArrowIndex b : q.incoming(p.end)) {
    Path qb = q.compose(qq, q.arrow_path(b));
    out.add_term(BasisVector::arrow_type(b, AssociatedPair{q.trivial_path(q.source(b)), qb}), 1);
  }
  return out;
}

std::vector<Quiver> tested_quivers() {
  std::vector<Quiver> qs{fixtures::one_loop(), fixtures::two_loops(), fixtures::two_cycle()};
  for (Quiver& q : fixtures::random_quivers(25)) qs.push_back(std::move(q));
  return qs;
}

TEST(Differential, TwoLoopsUnitVector) {
  Quiver q = fixtures::two_loops();
  Path e = q.trivial_path(0);
  ModuleElement img = differential(q, BasisVector::vertex_type({e, e}));
  ModuleElement expected;
  expected.add_term(BasisVector::arrow_type(arrow(q, "a1"), {e, path(q, {"a1"})}), 1);
  expected.add_term(BasisVector::arrow_type(arrow(q, "a2"), {e, path(q, {"a2"})}), 1);
  EXPECT_EQ(img, expected);
  EXPECT_EQ(format_element(q, img), "a1 z(p\"\", q\"a1\") + a2 z(p\"\", q\"a2\")");
}

TEST(Differential, NontrivialPStripsItsLastArrow) {
  Quiver q = fixtures::two_loops();
  ModuleElement img = differential(q, BasisVector::vertex_type({path(q, {"a2", "a1"}), path(q, {"a2"})}));
  ModuleElement expected;
  expected.add_term(BasisVector::arrow_type(arrow(q, "a2"), {path(q, {"a1"}), path(q, {"a2"})}), 1);
  EXPECT_EQ(img, expected);
  EXPECT_TRUE(differential(q, BasisVector::arrow_type(arrow(q, "a1"), {q.trivial_path(0), q.trivial_path(0)})).is_zero());
}

TEST(Differential, MatchesTheDefinitionOnAllPairs) {
  for (const Quiver& q : tested_quivers()) {
    for (const AssociatedPair& pair : enumerate_pairs(q, 4)) {
      BasisVector v = BasisVector::vertex_type(pair);
      EXPECT_EQ(differential(q, v), delta_oracle(q, v)) << q.name() << " " << format_vector(q, v);
      for (ArrowIndex a : q.outgoing(pair.vertex())) {
        EXPECT_TRUE(differential(q, BasisVector::arrow_type(a, pair)).is_zero());
      }
    }
  }
}

TEST(Window, OneLoopHasTwoVectorsPerDegree) {
  ComplexWindow w = build_window(fixtures::one_loop(), -2, 2, 4);
  for (int l = -2; l <= 2; ++l) EXPECT_EQ(w.basis(l).size(), 2u) << l;
  EXPECT_TRUE(w.basis(3).empty());
  EXPECT_THROW(w.matrix(2), std::out_of_range);
  for (int l = -2; l < 2; ++l) EXPECT_EQ(rank(w.matrix(l)), 1u);
}

TEST(Window, TwoLoopsDegreeZeroDimension) {
  ComplexWindow w = build_window(fixtures::two_loops(), 0, 0, 2);
  EXPECT_EQ(w.basis(0).size(), 12u);
}

TEST(Window, RejectsEmptyRanges) {
  EXPECT_THROW(build_window(fixtures::one_loop(), 1, 0, 4), std::invalid_argument);
  EXPECT_THROW(build_window(fixtures::one_loop(), 0, 1, -1), std::invalid_argument);
}

TEST(Window, CoordinatesRoundTrip) {
  ComplexWindow w = build_window(fixtures::two_cycle(), -1, 1, 3);
  for (int l = -1; l <= 1; ++l) {
    for (std::size_t k = 0; k < w.basis(l).size(); ++k) {
      ModuleElement m = ModuleElement::from_term(w.basis(l)[k], Scalar(3));
      EXPECT_EQ(w.element(l, w.coordinates(l, m)), m);
    }
  }
  ModuleElement far = ModuleElement::from_term(w.basis(1).front());
  EXPECT_THROW(w.coordinates(0, far), std::out_of_range);
}

TEST(DeltaSquared, VanishesOnAllTestedWindows) {
  for (const Quiver& q : tested_quivers()) {
    ComplexWindow w = build_window(q, -2, 2, 4);
    Certificate c = verify_delta_squared(w);
    EXPECT_TRUE(c.passed) << q.name() << ": " << c.witness.value_or("");
  }
}

TEST(Acyclicity, PassesOnAllTestedWindows) {
  for (const Quiver& q : tested_quivers()) {
    Certificate c = verify_acyclicity(build_window(q, -2, 2, 4));
    EXPECT_TRUE(c.passed) << q.name() << ": " << c.witness.value_or("");
  }
}

TEST(Acyclicity, OneLoopKernelsAreOneDimensional) {
  ComplexWindow w = build_window(fixtures::one_loop(), -3, 3, 6);
  EXPECT_TRUE(verify_acyclicity(w).passed);
  for (int l = -3; l < 3; ++l) EXPECT_EQ(kernel_basis(w.matrix(l)).size(), 1u) << l;
}

TEST(Acyclicity, DetectsAKilledColumn) {
  ComplexWindow w = build_window(fixtures::two_loops(), -2, 2, 4);
  SparseMatrix m = w.matrix(0);
  BasisPartition part = partition_basis(w, 0);
  ASSERT_FALSE(part.b1.empty());
  m.set_column(part.b1.front(), {});
  w.replace_matrix(0, m);
  EXPECT_FALSE(verify_acyclicity(w).passed);
}

TEST(Partition, ClassesCoverTheBasis) {
  ComplexWindow w = build_window(fixtures::two_loops(), -2, 2, 4);
  for (int l = -2; l <= 2; ++l) {
    BasisPartition p = partition_basis(w, l);
    EXPECT_EQ(p.b0.size() + p.b1.size() + p.b2.size(), w.basis(l).size());
    EXPECT_EQ(p.b0_prime.size() + p.b1_prime.size(), w.basis(l).size());
    if (l < 0) {
      EXPECT_TRUE(p.b2.empty());
    }
    for (int i : p.b0) EXPECT_FALSE(w.basis(l)[static_cast<std::size_t>(i)].is_vertex_type());
  }
}

TEST(ConditionW, HandBuiltMatrices) {
  // Columns: b0 = {0}, b1 = {1}, b2 = {2}; rows: b0' = {0}, b1' = {1}.
  WPartition part{{0}, {1}, {2}, {0}, {1}};
  SparseMatrix good(2, 3);
  good.set(1, 1, 1);
  good.set(0, 2, 1);
  good.set(1, 2, 1);
  EXPECT_TRUE(check_condition_W(good, part).passed);

  SparseMatrix w1 = good;
  w1.set(0, 0, 1);
  EXPECT_FALSE(check_condition_W(w1, part).passed);
  SparseMatrix w2 = good;
  w2.set(1, 1, 2);
  EXPECT_FALSE(check_condition_W(w2, part).passed);
  SparseMatrix w3 = good;
  w3.set(0, 2, 0);
  EXPECT_FALSE(check_condition_W(w3, part).passed);

  WPartition overlapping{{0, 1}, {1}, {2}, {0}, {1}};
  EXPECT_FALSE(check_condition_W(good, overlapping).passed);
  WPartition missing{{0}, {1}, {}, {0}, {1}};
  EXPECT_FALSE(check_condition_W(good, missing).passed);
}

TEST(ConditionW, DifferentialPassesOnAllTestedWindows) {
  for (const Quiver& q : tested_quivers()) {
    ComplexWindow w = build_window(q, -2, 2, 4);
    for (int l = -2; l < 2; ++l) {
      Certificate c = check_delta_condition_W(w, l);
      EXPECT_TRUE(c.passed) << q.name() << " degree " << l << ": " << c.witness.value_or("");
    }
  }
}

/// Every sign flip of a nonzero entry in a complete column, and a stray entry in an arrow-type
/// column, must break condition (W).
void expect_corruptions_rejected(const Quiver& q) {
  ComplexWindow base = build_window(q, -2, 2, 4);
  for (int l = -2; l < 2; ++l) {
    const SparseMatrix m = base.matrix(l);
    ComplexWindow w = base;
    int tried = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (!base.is_complete(base.basis(l)[static_cast<std::size_t>(c)])) continue;
      for (const auto& [r, x] : m.column(c)) {
        SparseMatrix bad = m;
        bad.set(r, c, -x);
        w.replace_matrix(l, std::move(bad));
        EXPECT_FALSE(check_delta_condition_W(w, l).passed) << q.name() << " degree " << l << " entry " << r << "," << c;
        ++tried;
      }
    }
    w.replace_matrix(l, m);
    EXPECT_GT(tried, 0);
    BasisPartition part = partition_basis(base, l);
    ASSERT_FALSE(part.b0.empty());
    SparseMatrix bad = m;
    bad.set(0, part.b0.front(), 1);
    w.replace_matrix(l, bad);
    EXPECT_FALSE(check_delta_condition_W(w, l).passed) << q.name() << " degree " << l;
  }
}

TEST(ConditionW, SingleEntryCorruptionsAreRejected) {
  expect_corruptions_rejected(fixtures::one_loop());
  expect_corruptions_rejected(fixtures::two_loops());
  expect_corruptions_rejected(fixtures::two_cycle());
}

TEST(SubcomplexK, ClosedAndZeroInNegativeDegrees) {
  for (const Quiver& q : tested_quivers()) {
    SubWindowResult k = subcomplex_K(build_window(q, -2, 2, 4));
    EXPECT_TRUE(k.certificate.passed) << q.name();
    EXPECT_TRUE(k.window.basis(-1).empty());
    for (int l = 0; l <= 2; ++l) {
      for (const BasisVector& v : k.window.basis(l)) EXPECT_TRUE(v.pair.p.is_trivial());
    }
  }
}

TEST(CokernelC, ModifiedDifferentialKillsLengthOneP) {
  Quiver q = fixtures::two_loops();
  BasisVector v = BasisVector::vertex_type({path(q, {"a2"}), q.trivial_path(0)});
  EXPECT_TRUE(apply_rule(q, DifferentialRule::kDeltaTilde, v).is_zero());
  EXPECT_FALSE(apply_rule(q, DifferentialRule::kDelta, v).is_zero());
  for (const Quiver& qq : tested_quivers()) {
    SubWindowResult c = cokernel_C(build_window(qq, -2, 2, 4));
    EXPECT_TRUE(c.certificate.passed) << qq.name();
  }
}

TEST(Decomposition, DiagonalsSplitTheCokernel) {
  for (const Quiver& q : tested_quivers()) {
    SubWindowResult c = cokernel_C(build_window(q, -2, 2, 4));
    Certificate d = verify_decomposition(c.window);
    EXPECT_TRUE(d.passed) << q.name() << ": " << d.witness.value_or("");
  }
}

TEST(Decomposition, OneLoopDiagonalsAreOnePairWide) {
  SubWindowResult c = cokernel_C(build_window(fixtures::one_loop(), -3, 0, 6));
  for (int n = 0; n <= 2; ++n) {
    SubWindowResult d = diagonal_C_n(c.window, n);
    for (int l = -3; l <= 0; ++l) {
      std::set<AssociatedPair> pairs;
      for (const BasisVector& v : d.window.basis(l)) pairs.insert(v.pair);
      EXPECT_LE(pairs.size(), 1u);
    }
  }
  EXPECT_THROW(diagonal_C_n(c.window, -1), std::invalid_argument);
}

TEST(Decomposition, ForgedCrossTermIsRejected) {
  SubWindowResult c = cokernel_C(build_window(fixtures::two_loops(), -2, 2, 4));
  ComplexWindow w = c.window;
  const auto& dom = w.basis(-1);
  const auto& cod = w.basis(0);
  int col = -1;
  int row = -1;
  for (std::size_t i = 0; i < dom.size() && col < 0; ++i) {
    for (std::size_t j = 0; j < cod.size(); ++j) {
      if (dom[i].pair.q.length() != cod[j].pair.q.length()) {
        col = static_cast<int>(i);
        row = static_cast<int>(j);
        break;
      }
    }
  }
  ASSERT_GE(col, 0);
  SparseMatrix m = w.matrix(-1);
  m.add(row, col, 1);
  w.replace_matrix(-1, m);
  EXPECT_FALSE(verify_decomposition(w).passed);
}

}  // namespace
}  // namespace leavitt
