#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "fixtures.hpp"
#include "leavitt/quiver.hpp"

namespace leavitt {
namespace {

using fixtures::arrow;
using fixtures::path;

TEST(ParseQuiver, OneLoop) {
  Quiver q = fixtures::one_loop();
  EXPECT_EQ(q.name(), "one_loop");
  EXPECT_EQ(q.vertex_count(), 1);
  EXPECT_EQ(q.arrow_count(), 1);
  EXPECT_EQ(q.associated(0), arrow(q, "a"));
  EXPECT_TRUE(q.associated_declared(0));
}

TEST(ParseQuiver, TwoLoopsWithDeclaredAssociatedArrow) {
  Quiver q = fixtures::two_loops();
  EXPECT_EQ(q.associated(0), arrow(q, "a1"));
  EXPECT_TRUE(q.is_associated(arrow(q, "a1")));
  EXPECT_FALSE(q.is_associated(arrow(q, "a2")));
}

TEST(ParseQuiver, SeparateAssociatedDeclaration) {
  Quiver q = parse_quiver("quiver t\nvertex 1\narrow a1 : 1 -> 1\narrow a2 : 1 -> 1\nassociated 1 a2\n");
  EXPECT_EQ(q.associated(0), arrow(q, "a2"));
}

TEST(ParseQuiver, SourceVertexIsRejectedInStrictMode) {
  const char* text = "quiver s\nvertex 1\nvertex 2\narrow b : 1 -> 2\narrow c : 2 -> 2\n";
  try {
    parse_quiver(text);
    FAIL() << "expected a QuiverError";
  } catch (const QuiverError& e) {
    EXPECT_NE(std::string(e.what()).find("source vertex"), std::string::npos);
  }
  Quiver lenient = parse_quiver(text, ParseMode::kLenient);
  Diagnostics d = validate(lenient);
  EXPECT_FALSE(d.ok);
  ASSERT_EQ(d.failures.size(), 1u);
  EXPECT_EQ(d.failures[0], "vertex 1 is a source");
}

TEST(ParseQuiver, StructuralErrorsAreRejected) {
  EXPECT_THROW(parse_quiver("vertex 1\nvertex 1\narrow a : 1 -> 1\n"), QuiverError);
  EXPECT_THROW(parse_quiver("vertex 1\narrow a : 1 -> 2\n"), QuiverError);
  EXPECT_THROW(parse_quiver("vertex 1\narrow a : 1 => 1\n"), QuiverError);
  EXPECT_THROW(parse_quiver("vertex 1\narrow a : 1 -> 1\narrow a : 1 -> 1\n"), QuiverError);
  EXPECT_THROW(parse_quiver("vertex 1\nloop a\n"), QuiverError);
  EXPECT_THROW(parse_quiver("vertex 1\nvertex 2\narrow a : 1 -> 2\narrow b : 2 -> 1\nassociated 1 a\n"), QuiverError);
  EXPECT_THROW(parse_quiver("vertex 1\narrow a : 1 -> 1 associated\nassociated 1 a\n"), QuiverError);
  EXPECT_THROW(parse_quiver(""), QuiverError);
}

TEST(ParseQuiver, ErrorsCarryLineNumbers) {
  try {
    parse_quiver("quiver x\nvertex 1\nbogus\n");
    FAIL() << "expected a QuiverError";
  } catch (const QuiverError& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos) << e.what();
  }
}

TEST(ParseQuiver, FormatRoundTrips) {
  for (const Quiver& q : {fixtures::one_loop(), fixtures::two_loops(), fixtures::two_cycle()}) {
    Quiver again = parse_quiver(format_quiver(q));
    EXPECT_EQ(again.name(), q.name());
    EXPECT_EQ(again.arrow_count(), q.arrow_count());
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) EXPECT_EQ(again.associated(v), q.associated(v));
  }
}

TEST(LoadQuiver, ShippedFilesAndMissingFile) {
  Quiver one = load_quiver(fixtures::quiver_file("one_loop"));
  EXPECT_EQ(one.arrow_count(), 1);
  Quiver two = load_quiver(fixtures::quiver_file("two_loops"));
  EXPECT_EQ(two.associated(0), arrow(two, "a1"));
  EXPECT_THROW(load_quiver(fixtures::quiver_file("does_not_exist")), std::runtime_error);
}

TEST(Validate, OneLoopPassesAndDefaultsAreNoted) {
  EXPECT_TRUE(validate(fixtures::one_loop()).ok);
  Quiver q = parse_quiver("quiver t\nvertex 1\narrow a1 : 1 -> 1\narrow a2 : 1 -> 1\n");
  Diagnostics d = validate(q);
  EXPECT_TRUE(d.ok);
  ASSERT_EQ(d.notes.size(), 1u);
  EXPECT_EQ(d.notes[0], "default associated arrow a1 chosen at vertex 1");
}

TEST(Opposite, SpecialArrowsReverseAssociatedArrows) {
  Quiver q = fixtures::two_loops();
  OppositeQuiver o = opposite(q);
  EXPECT_EQ(o.special(0), arrow(q, "a1"));
  EXPECT_TRUE(o.is_special(arrow(q, "a1")));
  Quiver c = fixtures::two_cycle();
  OppositeQuiver oc = opposite(c);
  ArrowIndex x = arrow(c, "x");
  EXPECT_EQ(oc.source(x), c.target(x));
  EXPECT_EQ(oc.target(x), c.source(x));
  EXPECT_EQ(oc.special(c.target(x)), x);
}

TEST(Opposite, PathReversal) {
  Quiver q = fixtures::two_loops();
  Path p = path(q, {"a2", "a1"});
  Path r = op(p);
  EXPECT_EQ(r.arrows, (std::vector<ArrowIndex>{arrow(q, "a1"), arrow(q, "a2")}));
  // a2^op is traversed first, so it is the first arrow of p^op.
  EXPECT_EQ(r.first_arrow(), arrow(q, "a2"));
  Quiver c = fixtures::two_cycle();
  Path yx = path(c, {"y", "x"});
  Path yx_op = op(yx);
  EXPECT_EQ(yx_op.start, yx.end);
  EXPECT_EQ(yx_op.end, yx.start);
  EXPECT_TRUE(opposite(c).is_valid_path(yx_op));
  EXPECT_EQ(op(op(yx)), yx);
}

TEST(Truncations, Examples) {
  Quiver one = fixtures::one_loop();
  auto [hat, tilde] = truncations(one, path(one, {"a"}));
  EXPECT_EQ(hat, one.trivial_path(0));
  EXPECT_EQ(tilde, one.trivial_path(0));

  Quiver two = fixtures::two_loops();
  auto t2 = truncations(two, path(two, {"a2", "a1"}));
  EXPECT_EQ(t2.first, path(two, {"a1"}));
  EXPECT_EQ(t2.second, path(two, {"a2"}));
  auto t3 = truncations(two, path(two, {"a1", "a2", "a1"}));
  EXPECT_EQ(t3.first, path(two, {"a2", "a1"}));
  EXPECT_EQ(t3.second, path(two, {"a1", "a2"}));
  EXPECT_THROW(truncations(two, two.trivial_path(0)), QuiverError);
}

TEST(MakePath, RejectsNonComposableWords) {
  Quiver c = fixtures::two_cycle();
  EXPECT_THROW(c.make_path({arrow(c, "x"), arrow(c, "x")}), QuiverError);
  Path zx = path(c, {"z", "x"});
  EXPECT_EQ(zx.start, 0);
  EXPECT_EQ(zx.end, 1);
  EXPECT_EQ(c.compose(path(c, {"y"}), zx), path(c, {"y", "z", "x"}));
}

TEST(EnumeratePaths, Examples) {
  Quiver two = fixtures::two_loops();
  auto len2 = enumerate_paths(two, 2);
  EXPECT_EQ(len2.size(), 4u);
  std::set<std::vector<ArrowIndex>> words;
  for (const auto& p : len2) words.insert(p.arrows);
  EXPECT_EQ(words.size(), 4u);
  Quiver one = fixtures::one_loop();
  auto len3 = enumerate_paths(one, 3);
  ASSERT_EQ(len3.size(), 1u);
  EXPECT_EQ(len3[0], path(one, {"a", "a", "a"}));
  Quiver c = fixtures::two_cycle();
  auto trivial = enumerate_paths(c, 0, 1);
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_EQ(trivial[0], c.trivial_path(1));
}

/// Entry (u, v) counts the paths of the given length from u to v.
std::vector<std::vector<long>> adjacency_power(const Quiver& q, int length) {
  int n = q.vertex_count();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int v = 0; v < n; ++v) m[v][v] = 1;
  for (int step = 0; step < length; ++step) {
    std::vector<std::vector<long>> next(n, std::vector<long>(n, 0));
    for (int u = 0; u < n; ++u) {
      for (const Arrow& a : q.arrows()) next[u][a.target] += m[u][a.source];
    }
    m = next;
  }
  return m;
}

TEST(EnumeratePaths, CountsMatchAdjacencyPowers) {
  for (const Quiver& q : fixtures::random_quivers(25)) {
    for (int length = 0; length <= 4; ++length) {
      auto power = adjacency_power(q, length);
      for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
        long expected = 0;
        for (VertexIndex u = 0; u < q.vertex_count(); ++u) expected += power[u][v];
        auto paths = enumerate_paths(q, length, v);
        EXPECT_EQ(static_cast<long>(paths.size()), expected) << q.name() << " length " << length;
        EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end()));
        for (const auto& p : paths) EXPECT_TRUE(q.is_valid_path(p));
      }
    }
  }
}

TEST(AssociatedPair, Examples) {
  Quiver two = fixtures::two_loops();
  Path a1 = path(two, {"a1"});
  Path a2 = path(two, {"a2"});
  EXPECT_FALSE(is_associated_pair(a1, a1, two));
  EXPECT_TRUE(is_associated_pair(a2, a2, two));
  EXPECT_TRUE(is_associated_pair(a1, a2, two));
  for (const Path& p : enumerate_paths(two, 3)) {
    Path e = two.trivial_path(p.start);
    EXPECT_TRUE(is_associated_pair(p, e, two));
    EXPECT_TRUE(is_associated_pair(e, p, two));
  }
  // The first arrows decide, not the last ones.
  EXPECT_TRUE(is_associated_pair(path(two, {"a1", "a2"}), path(two, {"a1", "a1"}), two));
  EXPECT_FALSE(is_associated_pair(path(two, {"a2", "a1"}), path(two, {"a1", "a1"}), two));
  Quiver c = fixtures::two_cycle();
  EXPECT_FALSE(is_associated_pair(path(c, {"x"}), path(c, {"z"}), c));
}

TEST(EnumerateLambda, OneLoopMatchesTheLaurentPattern) {
  Quiver q = fixtures::one_loop();
  auto neg = enumerate_lambda(q, 0, -2, 4);
  ASSERT_EQ(neg.size(), 1u);
  EXPECT_EQ(neg[0].p, path(q, {"a", "a"}));
  EXPECT_TRUE(neg[0].q.is_trivial());
  auto pos = enumerate_lambda(q, 0, 3, 3);
  ASSERT_EQ(pos.size(), 1u);
  EXPECT_EQ(pos[0].q, path(q, {"a", "a", "a"}));
  EXPECT_TRUE(enumerate_lambda(q, 0, 3, 2).empty());
}

TEST(EnumerateLambda, TwoLoopsDegreeZero) {
  Quiver q = fixtures::two_loops();
  auto pairs = enumerate_lambda(q, 0, 0, 2);
  Path e = q.trivial_path(0);
  Path a1 = path(q, {"a1"});
  Path a2 = path(q, {"a2"});
  std::vector<AssociatedPair> expected{{e, e}, {a1, a2}, {a2, a1}, {a2, a2}};
  EXPECT_EQ(pairs, expected);
}

TEST(EnumerateLambda, PairsAreConsistent) {
  for (const Quiver& q : fixtures::random_quivers(10)) {
    auto all = enumerate_pairs(q, 4);
    std::size_t total = 0;
    for (VertexIndex i = 0; i < q.vertex_count(); ++i) {
      for (int l = -4; l <= 4; ++l) {
        for (const auto& pr : enumerate_lambda(q, i, l, 4)) {
          EXPECT_EQ(pr.vertex(), i);
          EXPECT_EQ(pr.degree(), l);
          EXPECT_LE(pr.total_length(), 4);
          EXPECT_TRUE(is_associated_pair(pr.p, pr.q, q));
          EXPECT_TRUE(std::binary_search(all.begin(), all.end(), pr));
          ++total;
        }
      }
    }
    EXPECT_EQ(total, all.size()) << q.name();
  }
}

TEST(EnumerateLambda, NonemptyForEveryVertexAndDegree) {
  // Nonemptiness is confirmed by enumeration in a window wide enough to reach every vertex.
  for (const Quiver& q : fixtures::random_quivers(25)) {
    for (VertexIndex i = 0; i < q.vertex_count(); ++i) {
      for (int l = -3; l <= 3; ++l) {
        EXPECT_FALSE(enumerate_lambda(q, i, l, 2 * std::abs(l) + 2 * q.vertex_count()).empty())
            << q.name() << " vertex " << i << " degree " << l;
      }
    }
  }
}

TEST(TSet, Examples) {
  Quiver one = fixtures::one_loop();
  EXPECT_TRUE(t_set(one, arrow(one, "a")).empty());
  Quiver two = fixtures::two_loops();
  EXPECT_EQ(t_set(two, arrow(two, "a1")), std::vector<ArrowIndex>{arrow(two, "a2")});
  EXPECT_THROW(t_set(two, arrow(two, "a2")), QuiverError);
  Quiver star = parse_quiver(
      "quiver star\nvertex 0\nvertex 1\nvertex 2\nvertex 3\n"
      "arrow u : 1 -> 0\narrow v : 2 -> 0 associated\narrow w : 3 -> 0\n"
      "arrow r1 : 0 -> 1\narrow r2 : 0 -> 2\narrow r3 : 0 -> 3\n");
  EXPECT_EQ(t_set(star, arrow(star, "v")), (std::vector<ArrowIndex>{arrow(star, "u"), arrow(star, "w")}));
}

TEST(RandomQuiver, DeterministicAndWithoutSources) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Quiver a = random_quiver(seed, 4, 6);
    Quiver b = random_quiver(seed, 4, 6);
    EXPECT_EQ(format_quiver(a), format_quiver(b));
    EXPECT_TRUE(validate(a).ok);
    EXPECT_FALSE(a.has_sources());
    EXPECT_LE(a.vertex_count(), 4);
    EXPECT_LE(a.arrow_count(), 6);
  }
  EXPECT_THROW(random_quiver(1, 3, 2), std::invalid_argument);
}

}  // namespace
}  // namespace leavitt
