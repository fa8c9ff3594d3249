#include "leavitt/homology.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "leavitt/linalg.hpp"
#include "leavitt/literal.hpp"

namespace leavitt {

HomWindow::HomWindow(Quiver q, int bound) : quiver(std::move(q)), N(bound) {
  if (bound < 1) throw std::invalid_argument("Hom window needs N >= 1");
  for (AssociatedPair& pair : enumerate_pairs(quiver, N)) generators.push_back(BasisVector::vertex_type(std::move(pair)));
}

void HomElement::set(const BasisVector& generator, ModuleElement value) {
  if (!generator.is_vertex_type()) throw std::invalid_argument("Hom tables are keyed by vertex-type generators");
  if (value.is_zero()) {
    values_.erase(generator);
  } else {
    values_[generator] = std::move(value);
  }
}

ModuleElement HomElement::apply(const Quiver& q, const BasisVector& v) const {
  auto it = values_.find(BasisVector::vertex_type(v.pair));
  if (it == values_.end()) return {};
  return v.is_vertex_type() ? it->second : left_multiply(q, v.arrow, it->second);
}

ModuleElement HomElement::apply(const Quiver& q, const ModuleElement& m) const {
  ModuleElement out;
  for (const auto& [v, c] : m.terms()) {
    ModuleElement part = apply(q, v);
    part *= c;
    out += part;
  }
  return out;
}


HomElement& HomElement::operator+=(const HomElement& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("adding Hom elements of different degrees");
  for (const auto& [g, v] : other.values_) {
    ModuleElement sum = values_.count(g) ? values_.at(g) + v : v;
    set(g, std::move(sum));
  }
  return *this;
}

namespace {

bool fits_shape(const Quiver& q, const BasisVector& generator, int degree, const BasisVector& target) {
  if (target.degree() != generator.degree() + degree) return false;
  VertexIndex i = generator.vertex();
  return target.is_vertex_type() ? target.vertex() == i : q.target(target.arrow) == i;
}

Scalar sign(long k) { return Scalar(sign_power(k)); }

}  // namespace

std::vector<BasisVector> HomElement::shape_violations(const Quiver& q) const {
  std::vector<BasisVector> out;
  for (const auto& [g, value] : values_) {
    for (const auto& [v, c] : value.terms()) {
      if (!fits_shape(q, g, degree_, v)) {
        out.push_back(g);
        break;
      }
    }
  }
  return out;
}

HomElement rho(const RightAction& action, const LpaElement& b, int n, const HomWindow& w) {
  if (!b.is_zero() && b.degree() != n) throw std::domain_error("rho: element is not of degree " + std::to_string(n));
  HomElement out(n);
  for (const BasisVector& g : w.generators) {
    ModuleElement value = action.act(g, b);
    value *= sign(static_cast<long>(n) * g.degree());
    out.set(g, std::move(value));
  }
  return out;
}

HomElement coboundary(const HomWindow& w, const HomElement& f) {
  const Quiver& q = w.quiver;
  int n = f.degree();
  HomElement out(n + 1);
  for (const BasisVector& g : w.generators) {
    ModuleElement value = differential(q, f.apply(q, g));
    ModuleElement back = f.apply(q, differential(q, g));
    back *= sign(n);
    value -= back;
    out.set(g, std::move(value));
  }
  return out;
}

HomElement random_hom(const HomWindow& w, int n, int support_bound, std::uint64_t seed) {
  const Quiver& q = w.quiver;
  // Allowed targets of e_i z in each degree: e_i z' and g z' with t(g) = i.
  std::map<std::pair<VertexIndex, int>, std::vector<BasisVector>> targets;
  for (const BasisVector& g : w.generators) {
    targets[{g.vertex(), g.degree()}].push_back(g);
    for (ArrowIndex a : q.outgoing(g.vertex())) {
      targets[{q.target(a), g.degree()}].push_back(BasisVector::arrow_type(a, g.pair));
    }
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution used(0.5);
  std::uniform_int_distribution<long> coeff(1, 3);
  std::bernoulli_distribution negative(0.5);
  HomElement out(n);
  for (const BasisVector& g : w.generators) {
    if (g.pair.total_length() > support_bound || !used(rng)) continue;
    auto it = targets.find({g.vertex(), g.degree() + n});
    if (it == targets.end()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, it->second.size() - 1);
    ModuleElement value;
    for (int k = 0; k < 2; ++k) {
      long c = coeff(rng);
      value.add_term(it->second[pick(rng)], negative(rng) ? -c : c);
    }
    out.set(g, std::move(value));
  }
  return out;
}

const LpaElement& CocycleDecomposition::y_at(const AssociatedPair& pair) const {
  auto it = y.find(pair);
  if (it == y.end()) throw std::out_of_range("cocycle component outside the Hom window");
  return it->second;
}

LpaElement CocycleDecomposition::mu_at(const AssociatedPair& pair, ArrowIndex g) const {
  y_at(pair);
  auto it = mu.find(pair);
  if (it == mu.end()) return {};
  auto jt = it->second.find(g);
  return jt == it->second.end() ? LpaElement{} : jt->second;
}

CocycleDecomposition decompose_cocycle(const LeavittAlgebra& b, const HomElement& y, const HomWindow& w) {
  const Quiver& q = w.quiver;
  CocycleDecomposition d;
  d.degree = y.degree();
  d.certificate = Certificate("cocycle-decomposition", "y is A-linear and splits into phi and phi_g components",
                              q.name(), WindowSpec{-w.N, w.N, w.N});
  for (const BasisVector& g : w.generators) {
    LpaElement& yc = d.y[g.pair];
    ModuleElement value = y.apply(q, g);
    for (const auto& [v, c] : value.terms()) {
      if (!d.certificate.require(fits_shape(q, g, y.degree(), v), [&] {
            return "image of " + format_vector(q, g) + " contains " + format_vector(q, v) + ", which no A-linear map allows";
          })) {
        continue;
      }
      LpaElement term = LpaElement::from_term(b.chi(v.pair), c);
      if (v.is_vertex_type()) {
        yc += term;
      } else {
        d.mu[g.pair][v.arrow] += term;
      }
    }
  }
  d.certificate.dimensions["generators"] = w.generators.size();
  return d;
}

ExtractedX extract_x(const LeavittAlgebra& b, const CocycleDecomposition& d, const HomWindow& w) {
  const Quiver& q = w.quiver;
  int n = d.degree;
  ExtractedX out;
  out.certificate = Certificate("extract-x", "the components of y are (-1)^{nl} (p^op)* q^op x for x = sum of y_(e_j, e_j)",
                                q.name(), WindowSpec{-w.N, w.N, w.N});
  Certificate& cert = out.certificate;
  for (VertexIndex j = 0; j < q.vertex_count(); ++j) {
    Path e = q.trivial_path(j);
    out.x += d.y_at(AssociatedPair{e, e});
  }
  long checks = 0;
  for (const BasisVector& g : w.generators) {
    const AssociatedPair& pair = g.pair;
    const LpaElement& ypq = d.y_at(pair);
    if (pair.p.is_trivial()) {
      for (ArrowIndex a : q.incoming(pair.p.end)) {
        AssociatedPair next{q.trivial_path(q.source(a)), q.compose(pair.q, q.arrow_path(a))};
        if (next.total_length() > w.N) continue;
        ++checks;
        cert.require(d.y_at(next) == sign(n) * b.multiply(b.arrow(a), ypq), [&] {
          return "arrow recursion fails from " + format_vector(q, g) + " along " + q.arrow(a).id;
        });
      }
    } else {
      ArrowIndex a = pair.p.last_arrow();
      AssociatedPair prev{truncations(q, pair.p).first, pair.q};
      ++checks;
      cert.require(ypq == sign(n) * b.multiply(b.ghost(a), d.y_at(prev)),
                   [&] { return "ghost recursion fails at " + format_vector(q, g); });
    }
    ++checks;
    LpaElement closed = b.multiply(LpaElement::from_term(b.chi(pair)), out.x);
    closed *= sign(static_cast<long>(n) * pair.degree());
    cert.require(ypq == closed, [&] {
      return "closed form fails at " + format_vector(q, g) + ": component " + format_element(q, ypq) + ", expected " +
             format_element(q, closed);
    });
  }
  cert.dimensions["checks"] = checks;
  return out;
}

nlohmann::ordered_json CocycleCertificate::to_json(const Quiver& q) const {
  nlohmann::ordered_json j;
  j["degree"] = degree;
  j["x"] = format_element(q, x);
  nlohmann::ordered_json hj = nlohmann::ordered_json::array();
  for (const auto& [g, v] : h.values()) hj.push_back({{"source", format_vector(q, g)}, {"value", format_element(q, v)}});
  j["h"] = std::move(hj);
  j["residual"] = certificate.to_json();
  return j;
}

CocycleCertificate build_homotopy(const RightAction& action, const HomElement& y, const CocycleDecomposition& d,
                                  const LpaElement& x, const HomWindow& w) {
  const Quiver& q = w.quiver;
  const LeavittAlgebra& b = action.algebra();
  int n = d.degree;
  CocycleCertificate out;
  out.degree = n;
  out.x = x;
  out.h = HomElement(n - 1);
  out.certificate = Certificate("homotopy", "y - rho(x) = delta h - (-1)^{n-1} h delta on interior basis vectors",
                                q.name(), WindowSpec{-w.N, w.N, w.N});
  Certificate& cert = out.certificate;

  // Both recursions shorten p or q, so ordering by (l(p), l(q)) reads only earlier entries.
  std::vector<BasisVector> order = w.generators;
  std::stable_sort(order.begin(), order.end(), [](const BasisVector& u, const BasisVector& v) {
    return std::pair(u.pair.p.length(), u.pair.q.length()) < std::pair(v.pair.p.length(), v.pair.q.length());
  });
  std::map<AssociatedPair, LpaElement> theta;
  auto theta_at = [&](const AssociatedPair& pair) -> const LpaElement& {
    auto it = theta.find(pair);
    if (it == theta.end()) throw std::logic_error("theta requested before it was computed");
    return it->second;
  };
  for (const BasisVector& g : order) {
    const AssociatedPair& pair = g.pair;
    VertexIndex i = pair.p.end;
    LpaElement t;
    if (pair.p.is_trivial() && pair.q.is_trivial()) {
      for (ArrowIndex a : q.outgoing(i)) {
        t += d.mu_at(AssociatedPair{q.arrow_path(a), q.trivial_path(q.source(a))}, a);
      }
    } else if (pair.p.is_trivial()) {
      ArrowIndex a = pair.q.first_arrow();
      Path tilde = truncations(q, pair.q).second;
      AssociatedPair prev{q.trivial_path(tilde.start), tilde};
      t = b.multiply(b.arrow(a), theta_at(prev)) - d.mu_at(prev, a);
      t *= sign(n - 1);
    } else {
      ArrowIndex a = pair.p.last_arrow();
      t = b.multiply(b.ghost(a), theta_at(AssociatedPair{truncations(q, pair.p).first, pair.q}));
      t *= sign(n - 1);
      for (ArrowIndex c : q.incoming(i)) t += b.multiply(b.ghost(c), d.mu_at(pair, c));
    }
    out.h.set(g, phi(b, t));
    theta.emplace(pair, std::move(t));
  }

  HomElement rx = rho(action, x, n, w);
  long checked = 0;
  for (const BasisVector& g : w.generators) {
    if (!w.is_interior(g)) continue;
    std::vector<BasisVector> vectors{g};
    for (ArrowIndex a : q.outgoing(g.vertex())) vectors.push_back(BasisVector::arrow_type(a, g.pair));
    for (const BasisVector& v : vectors) {
      ++checked;
      ModuleElement lhs = y.apply(q, v) - rx.apply(q, v);
      ModuleElement rhs = differential(q, out.h.apply(q, v));
      ModuleElement back = out.h.apply(q, differential(q, v));
      back *= sign(n - 1);
      rhs -= back;
      cert.require(lhs == rhs, [&] {
        return "residual at " + format_vector(q, v) + ": y - rho(x) = " + format_element(q, lhs) + ", homotopy gives " +
               format_element(q, rhs);
      });
      if (!v.is_vertex_type()) {
        cert.require(lhs.is_zero(), [&] { return "y - rho(x) is nonzero on " + format_vector(q, v); });
      }
    }
  }
  cert.dimensions["checked_vectors"] = checked;
  cert.dimensions["h_support"] = out.h.values().size();
  return out;
}

Certificate verify_coboundary_lemma(const HomWindow& w, int n, std::uint64_t seed, int samples) {
  const Quiver& q = w.quiver;
  Certificate cert("coboundary-lemma", "coboundaries of interior-supported maps land in the kernel of the differential",
                   q.name(), WindowSpec{-w.N, w.N, w.N});
  for (int s = 0; s < samples; ++s) {
    HomElement h = random_hom(w, n - 1, w.N - 2, seed + static_cast<std::uint64_t>(s));
    HomElement f = coboundary(w, h);
    HomElement ff = coboundary(w, f);
    for (const BasisVector& g : w.generators) {
      if (!w.is_interior(g)) continue;
      cert.require(differential(q, f.apply(q, g)).is_zero(),
                   [&] { return "D(h) maps " + format_vector(q, g) + " outside the kernel (sample " + std::to_string(s) + ")"; });
      cert.require(ff.apply(q, g).is_zero(),
                   [&] { return "D(D(h)) is nonzero on " + format_vector(q, g) + " (sample " + std::to_string(s) + ")"; });
    }
  }
  cert.dimensions["degree"] = n;
  cert.dimensions["samples"] = samples;
  return cert;
}

namespace {

/// rho restricted to the windowed normal terms of degree n, as a matrix on flattened
/// (generator, target) coordinates.
std::pair<std::size_t, std::size_t> rho_rank(const RightAction& action, const HomWindow& w, int n) {
  std::vector<NormalTerm> terms = action.algebra().basis_terms(n, w.N);
  std::map<std::pair<BasisVector, BasisVector>, int> coords;
  std::vector<SparseVector> columns;
  for (const NormalTerm& t : terms) {
    HomElement r = rho(action, LpaElement::from_term(t), n, w);
    SparseVector col;
    for (const auto& [g, value] : r.values()) {
      for (const auto& [v, c] : value.terms()) {
        auto [it, inserted] = coords.try_emplace({g, v}, static_cast<int>(coords.size()));
        col[it->second] = c;
      }
    }
    columns.push_back(std::move(col));
  }
  SparseMatrix m(static_cast<int>(coords.size()), static_cast<int>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) m.set_column(static_cast<int>(k), columns[k]);
  return {rank(m), terms.size()};
}

}  // namespace

Certificate verify_embedding(const RightAction& action, const HomWindow& w, int n_min, int n_max) {
  const Quiver& q = w.quiver;
  const LeavittAlgebra& b = action.algebra();
  Certificate cert("embedding", "rho induces an injective map from B into the cohomology of the endomorphism algebra",
                   q.name(), WindowSpec{n_min, n_max, w.N});
  for (VertexIndex i = 0; i < q.vertex_count(); ++i) {
    Path e = q.trivial_path(i);
    BasisVector v = BasisVector::vertex_type(AssociatedPair{e, e});
    HomElement r = rho(action, b.vertex(i), 0, w);
    cert.require(r.apply(q, v) == ModuleElement::from_term(v),
                 [&] { return "rho(e(" + q.vertex_id(i) + ")) does not fix " + format_vector(q, v); });
    cert.require(!differential(q, v).is_zero(), [&] { return format_vector(q, v) + " is a cycle"; });
  }
  for (int n = n_min; n <= n_max; ++n) {
    auto [r, count] = rho_rank(action, w, n);
    cert.require(r == count, [&] {
      return "rho has rank " + std::to_string(r) + " on the " + std::to_string(count) + " normal terms of degree " +
             std::to_string(n);
    });
    cert.dimensions["B" + std::to_string(n)] = count;
  }
  return cert;
}

Certificate quasi_balanced_report(const RightAction& action, const HomWindow& w, const QuasiBalancedOptions& options) {
  const Quiver& q = w.quiver;
  const LeavittAlgebra& b = action.algebra();
  Certificate report("quasi-balanced", "the bimodule is right quasi-balanced", q.name(),
                     WindowSpec{options.n_min, options.n_max, w.N});
  for (int n = options.n_min; n <= options.n_max; ++n) {
    Certificate cert("quasi-balanced-degree", "H^n(rho) is bijective in degree " + std::to_string(n), q.name(),
                     WindowSpec{n, n, w.N});
    auto [r, count] = rho_rank(action, w, n);
    cert.require(r == count, [&] { return "rho is not injective on windowed B^" + std::to_string(n); });

    for (const NormalTerm& t : b.basis_terms(n, w.N)) {
      LpaElement x = LpaElement::from_term(t);
      HomElement y = rho(action, x, n, w);
      CocycleDecomposition d = decompose_cocycle(b, y, w);
      ExtractedX ex = extract_x(b, d, w);
      bool mu_zero = true;
      for (const auto& [pair, by_arrow] : d.mu) {
        for (const auto& [a, m] : by_arrow) mu_zero = mu_zero && m.is_zero();
      }
      cert.require(d.certificate.passed && ex.certificate.passed && ex.x == x && mu_zero, [&] {
        std::string why = !d.certificate.passed ? *d.certificate.witness
                          : !ex.certificate.passed ? *ex.certificate.witness
                          : !mu_zero ? std::string("rho(x) has arrow components")
                                     : "extract_x returned " + format_element(q, ex.x);
        return "round trip fails for " + format_term(q, t) + ": " + why;
      });
    }

    int passed = 0;
    for (int s = 0; s < options.cocycles; ++s) {
      std::uint64_t seed = options.seed * 1000003ULL + static_cast<std::uint64_t>((n + 64) * 4099 + s);
      LpaElement x0 = b.random_element(seed, n, n, w.N, 3, options.field);
      HomElement y = rho(action, x0, n, w);
      y += coboundary(w, random_hom(w, n - 1, w.N - 1, seed ^ 0x9e3779b97f4a7c15ULL));
      CocycleDecomposition d = decompose_cocycle(b, y, w);
      ExtractedX ex = extract_x(b, d, w);
      CocycleCertificate cc = build_homotopy(action, y, d, ex.x, w);
      bool ok = d.certificate.passed && ex.certificate.passed && cc.certificate.passed && ex.x == x0;
      if (ok) {
        ++passed;
        continue;
      }
      if (!cert.passed) continue;
      Certificate failure("cocycle-sample", "sample " + std::to_string(s) + " of degree " + std::to_string(n), q.name(),
                          WindowSpec{n, n, w.N});
      failure.adopt(d.certificate);
      failure.adopt(ex.certificate);
      failure.adopt(cc.certificate);
      if (failure.passed) failure.fail("extract_x returned " + format_element(q, ex.x) + " instead of " + format_element(q, x0));
      cert.adopt(std::move(failure));
    }
    cert.dimensions["windowed_terms"] = count;
    cert.dimensions["cocycles"] = options.cocycles;
    cert.dimensions["cocycles_certified"] = passed;
    report.adopt(std::move(cert));
  }
  return report;
}

}  // namespace leavitt
