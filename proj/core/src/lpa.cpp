#include "leavitt/lpa.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace leavitt {

LeavittAlgebra::LeavittAlgebra(Quiver q) : quiver_(std::move(q)), op_(quiver_) {
  if (quiver_.has_sources()) throw QuiverError("the Leavitt algebra needs a quiver without sources");
  op_t_sets_.resize(quiver_.vertex_count());
  for (VertexIndex v = 0; v < quiver_.vertex_count(); ++v) {
    for (ArrowIndex b : op_.outgoing(v)) {
      if (b != op_.special(v)) op_t_sets_[v].push_back(b);
    }
  }
}

NormalTerm LeavittAlgebra::chi(const AssociatedPair& pair) const {
  if (!is_associated_pair(pair.p, pair.q, quiver_)) {
    throw QuiverError("(" + quiver_.path_to_string(pair.p) + ", " + quiver_.path_to_string(pair.q) +
                      ") is not an associated pair");
  }
  return NormalTerm{op(pair.p), op(pair.q)};
}

AssociatedPair LeavittAlgebra::chi_inv(const NormalTerm& t) const {
  if (!is_normal(t)) throw QuiverError("chi_inv of a term that is not in normal form");
  return AssociatedPair{op(t.ghost), op(t.real)};
}

bool LeavittAlgebra::is_normal(const NormalTerm& t) const {
  if (!op_.is_valid_path(t.ghost) || !op_.is_valid_path(t.real)) return false;
  if (t.ghost.end != t.real.end) return false;
  if (t.ghost.is_trivial() || t.real.is_trivial()) return true;
  ArrowIndex a = t.ghost.last_arrow();
  return a != t.real.last_arrow() || !op_.is_special(a);
}

LpaElement LeavittAlgebra::vertex(VertexIndex v) const {
  Path e = op_.trivial_path(v);
  return LpaElement::from_term(NormalTerm{e, e});
}

LpaElement LeavittAlgebra::arrow(ArrowIndex a) const {
  Path r = op_.arrow_path(a);
  return LpaElement::from_term(NormalTerm{op_.trivial_path(r.end), r});
}

LpaElement LeavittAlgebra::ghost(ArrowIndex a) const {
  Path g = op_.arrow_path(a);
  return LpaElement::from_term(NormalTerm{g, op_.trivial_path(g.end)});
}

LpaElement LeavittAlgebra::one() const {
  LpaElement r;
  for (VertexIndex v = 0; v < quiver_.vertex_count(); ++v) r += vertex(v);
  return r;
}

LpaElement LeavittAlgebra::generator(GeneratorKind kind, std::string_view id) const {
  if (kind == GeneratorKind::kVertex) {
    auto v = quiver_.find_vertex(id);
    if (!v) throw QuiverError("unknown vertex '" + std::string(id) + "'");
    return vertex(*v);
  }
  auto a = quiver_.find_arrow(id);
  if (!a) throw QuiverError("unknown arrow '" + std::string(id) + "'");
  return kind == GeneratorKind::kArrow ? arrow(*a) : ghost(*a);
}

LpaElement LeavittAlgebra::multiply(const LpaElement& x, const LpaElement& y) const {
  LpaElement out;
  for (const auto& [tx, cx] : x.terms()) {
    for (const auto& [ty, cy] : y.terms()) multiply_terms(tx, ty, cx * cy, out);
  }
  return out;
}

// Product of g1* r1 and g2* r2.
//
// Written out in generators, r1 = c_n ... c_1 and g2* = d_1* ... d_k* where
// g2 = d_k ... d_1, so the two words meet in c_1 d_1*. CK1 gives
// c_1 d_1* = delta(c_1, d_1) e, so the meeting arrows cancel pairwise from the first
// arrows inwards (the arrows.back() end of our written-order vectors) until one side
// runs out or two different arrows meet (product zero). The vertex relations absorb the
// idempotents left behind. Three outcomes remain:
//   r1 = g2:          g1* r2
//   r1 = r' g2:       g1* (r' r2)
//   g2 = g' r1:       (g' g1)* r2,   using (g' g1)* = g1* g'*.
// The new junction of g1 with the real part may now pair a special arrow with itself;
// reduce_into removes it with CK2.
void LeavittAlgebra::multiply_terms(const NormalTerm& x, const NormalTerm& y, const Scalar& c,
                                    LpaElement& out) const {
  const Path& r1 = x.real;
  const Path& g2 = y.ghost;
  if (r1.start != g2.start) return;
  std::size_t n = r1.arrows.size();
  std::size_t k = g2.arrows.size();
  std::size_t common = std::min(n, k);
  if (!std::equal(r1.arrows.end() - static_cast<std::ptrdiff_t>(common), r1.arrows.end(),
                  g2.arrows.end() - static_cast<std::ptrdiff_t>(common))) {
    return;
  }
  if (n >= k) {
    Path real{y.real.start, r1.end, {r1.arrows.begin(), r1.arrows.end() - static_cast<std::ptrdiff_t>(k)}};
    real.arrows.insert(real.arrows.end(), y.real.arrows.begin(), y.real.arrows.end());
    reduce_into(x.ghost, std::move(real), c, out);
  } else {
    Path ghost{x.ghost.start, g2.end, {g2.arrows.begin(), g2.arrows.end() - static_cast<std::ptrdiff_t>(n)}};
    ghost.arrows.insert(ghost.arrows.end(), x.ghost.arrows.begin(), x.ghost.arrows.end());
    reduce_into(std::move(ghost), y.real, c, out);
  }
}

// While the junction reads s* s with s special at vertex i, rewrite it with CK2:
//   s* s = e_i - sum_{b != s, s(b) = i} b* b.
// The leading branch shortens both paths by one and may expose a new special junction;
// every branch term (b g0)* (b r0) has the non-special b at its junction and is normal.
void LeavittAlgebra::reduce_into(Path ghost, Path real, Scalar c, LpaElement& out) const {
  while (!ghost.is_trivial() && !real.is_trivial()) {
    ArrowIndex s = ghost.last_arrow();
    if (s != real.last_arrow() || !op_.is_special(s)) break;
    VertexIndex i = op_.source(s);
    ghost.arrows.erase(ghost.arrows.begin());
    real.arrows.erase(real.arrows.begin());
    ghost.end = i;
    real.end = i;
    for (ArrowIndex b : op_t_sets_[i]) {
      Path bg{ghost.start, op_.target(b), {b}};
      bg.arrows.insert(bg.arrows.end(), ghost.arrows.begin(), ghost.arrows.end());
      Path br{real.start, op_.target(b), {b}};
      br.arrows.insert(br.arrows.end(), real.arrows.begin(), real.arrows.end());
      out.add_term(NormalTerm{std::move(bg), std::move(br)}, -c);
    }
  }
  out.add_term(NormalTerm{std::move(ghost), std::move(real)}, c);
}

std::vector<NormalTerm> LeavittAlgebra::basis_terms(int degree, int length_bound) const {
  std::vector<NormalTerm> out;
  for (int lg = std::max(0, -degree); 2 * lg + degree <= length_bound; ++lg) {
    int lr = lg + degree;
    for (const Path& g : enumerate_paths(op_, lg)) {
      for (const Path& r : enumerate_paths(op_, lr, g.end)) {
        NormalTerm t{g, r};
        if (is_normal(t)) out.push_back(std::move(t));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LpaElement LeavittAlgebra::random_element(std::uint64_t seed, int min_degree, int max_degree, int length_bound,
                                          int term_count, const Field& field) const {
  if (min_degree > max_degree || length_bound < 0 || term_count < 1) {
    throw std::invalid_argument("random_element: empty degree range or nonpositive bounds");
  }
  std::vector<NormalTerm> pool;
  for (int d = min_degree; d <= max_degree; ++d) {
    auto terms = basis_terms(d, length_bound);
    pool.insert(pool.end(), terms.begin(), terms.end());
  }
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(pool.size(), static_cast<std::size_t>(term_count)));
  std::uniform_int_distribution<long> num(1, 5);
  std::uniform_int_distribution<long> den(1, 3);
  std::bernoulli_distribution negative(0.5);
  LpaElement out;
  for (const NormalTerm& t : pool) {
    long a = num(rng);
    long b = field.is_prime_field() ? 1 : den(rng);
    Scalar c = Scalar::in_field(field, negative(rng) ? -a : a, b);
    if (c.is_zero()) c = Scalar::in_field(field, 1);
    out.add_term(t, c);
  }
  return out;
}

}  // namespace leavitt

namespace leavitt {

namespace {

bool all_normal(const LeavittAlgebra& b, const LpaElement& x) {
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& kv) { return b.is_normal(kv.first); });
}

}  // namespace

Certificate verify_lpa_relations(const LeavittAlgebra& b) {
  const Quiver& q = b.quiver();
  Certificate cert("lpa-relations", "the defining relations of L_k(Q^op) hold after normalization", q.name());
  auto mul = [&](const LpaElement& x, const LpaElement& y) { return b.multiply(x, y); };
  long checks = 0;
  auto check = [&](bool ok, const char* relation, const std::string& where) {
    ++checks;
    cert.require(ok, [&] { return std::string("relation ") + relation + " fails for " + where; });
  };
  for (VertexIndex i = 0; i < q.vertex_count(); ++i) {
    for (VertexIndex j = 0; j < q.vertex_count(); ++j) {
      check(mul(b.vertex(i), b.vertex(j)) == (i == j ? b.vertex(i) : LpaElement{}), "idempotent",
            "e(" + q.vertex_id(i) + "), e(" + q.vertex_id(j) + ")");
    }
    LpaElement sum;
    for (ArrowIndex a : q.incoming(i)) sum += mul(b.ghost(a), b.arrow(a));
    check(sum == b.vertex(i), "CK2", "vertex " + q.vertex_id(i));
  }
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const std::string& id = q.arrow(a).id;
    LpaElement ar = b.arrow(a);
    LpaElement gh = b.ghost(a);
    check(mul(ar, b.vertex(q.target(a))) == ar && mul(b.vertex(q.source(a)), ar) == ar, "arrow-vertex", id);
    check(mul(gh, b.vertex(q.source(a))) == gh && mul(b.vertex(q.target(a)), gh) == gh, "ghost-vertex", id);
    for (ArrowIndex c = 0; c < q.arrow_count(); ++c) {
      check(mul(ar, b.ghost(c)) == (a == c ? b.vertex(q.source(a)) : LpaElement{}), "CK1", id + ", " + q.arrow(c).id);
      for (const LpaElement& x : {ar, gh}) {
        for (const LpaElement& y : {b.arrow(c), b.ghost(c)}) check(all_normal(b, mul(x, y)), "normal form", id);
      }
    }
  }
  cert.dimensions["checks"] = checks;
  return cert;
}

Certificate verify_lpa_associativity(const LeavittAlgebra& b, std::uint64_t seed, int samples, int length_bound,
                                     const Field& field) {
  const Quiver& q = b.quiver();
  Certificate cert("lpa-associativity", "multiplication in L_k(Q^op) is associative and lands in normal form", q.name());
  std::mt19937_64 rng(seed);
  int d = std::max(1, length_bound);
  for (int s = 0; s < samples; ++s) {
    LpaElement x = b.random_element(rng(), -d, d, length_bound, 3, field);
    LpaElement y = b.random_element(rng(), -d, d, length_bound, 3, field);
    LpaElement z = b.random_element(rng(), -d, d, length_bound, 3, field);
    LpaElement left = b.multiply(b.multiply(x, y), z);
    LpaElement right = b.multiply(x, b.multiply(y, z));
    cert.require(left == right && all_normal(b, left), [&] {
      return "sample " + std::to_string(s) + ": (xy)z and x(yz) differ or are not normal";
    });
  }
  cert.dimensions["samples"] = samples;
  cert.dimensions["length_bound"] = length_bound;
  return cert;
}

Certificate verify_chi_bijection(const LeavittAlgebra& b, int l_min, int l_max, int N) {
  const Quiver& q = b.quiver();
  Certificate cert("chi-bijection", "chi is a bijection from associated pairs onto normal terms", q.name(),
                   WindowSpec{l_min, l_max, N});
  for (int l = l_min; l <= l_max; ++l) {
    std::vector<NormalTerm> images;
    for (VertexIndex i = 0; i < q.vertex_count(); ++i) {
      for (const AssociatedPair& pair : enumerate_lambda(q, i, l, N)) {
        NormalTerm t = b.chi(pair);
        cert.require(b.is_normal(t) && b.chi_inv(t) == pair, [&] { return "chi_inv does not invert chi in degree " + std::to_string(l); });
        images.push_back(t);
      }
    }
    std::sort(images.begin(), images.end());
    std::vector<NormalTerm> terms = b.basis_terms(l, N);
    std::sort(terms.begin(), terms.end());
    cert.require(images == terms, [&] {
      return "degree " + std::to_string(l) + ": " + std::to_string(images.size()) + " pairs vs " +
             std::to_string(terms.size()) + " normal terms";
    });
    cert.dimensions["l" + std::to_string(l)] = terms.size();
  }
  return cert;
}

}  // namespace leavitt
