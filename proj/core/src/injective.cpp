#include "leavitt/injective.hpp"

#include <algorithm>
#include <stdexcept>

#include "leavitt/complex.hpp"

namespace leavitt {

std::vector<AlgebraGenerator> algebra_generators(const Quiver& q) {
  std::vector<AlgebraGenerator> out;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) out.push_back({false, v});
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) out.push_back({true, a});
  return out;
}

int dual_dimension(const Quiver& q) { return q.vertex_count() + q.arrow_count(); }

int dual_left_action(const Quiver& q, const AlgebraGenerator& a, int u) {
  int nv = q.vertex_count();
  if (!a.is_arrow) {
    if (u < nv) return u == a.index ? u : -1;
    return q.source(u - nv) == a.index ? u : -1;
  }
  if (u < nv) return -1;
  return u - nv == a.index ? q.target(a.index) : -1;
}

int dual_right_action(const Quiver& q, int u, const AlgebraGenerator& a) {
  int nv = q.vertex_count();
  if (!a.is_arrow) {
    if (u < nv) return u == a.index ? u : -1;
    return q.target(u - nv) == a.index ? u : -1;
  }
  if (u < nv) return -1;
  return u - nv == a.index ? q.source(a.index) : -1;
}

InjectiveElement injective_left_action(const Quiver& q, const AlgebraGenerator& a, const InjectiveElement& m) {
  InjectiveElement out;
  for (const auto& [v, c] : m.terms()) {
    VertexIndex i = v.vertex();
    if (!a.is_arrow) {
      VertexIndex k = v.is_vertex_type() ? i : q.source(v.arrow);
      if (k == a.index) out.add_term(v, c);
    } else if (!v.is_vertex_type() && v.arrow == a.index) {
      out.add_term(InjectiveVector{v.q, -1}, c);
    }
  }
  return out;
}

InjectiveElement injective_differential(const Quiver& q, const InjectiveVector& v) {
  InjectiveElement out;
  if (v.is_vertex_type()) return out;
  out.add_term(InjectiveVector{q.compose(v.q, q.arrow_path(v.arrow)), -1}, 1);
  return out;
}

InjectiveWindow::InjectiveWindow(Quiver q, int L, int N) : quiver_(std::move(q)), L_(L), N_(N) {
  if (L < 1) throw std::invalid_argument("injective window needs L >= 1");
  if (N < L) throw std::invalid_argument("injective window needs N >= L");
  for (int l = 0; l <= L; ++l) {
    auto& b = basis_[l];
    for (const Path& p : enumerate_paths(quiver_, l)) {
      b.push_back(InjectiveVector{p, -1});
      for (ArrowIndex a : quiver_.incoming(p.start)) b.push_back(InjectiveVector{p, a});
    }
    std::sort(b.begin(), b.end());
    for (std::size_t k = 0; k < b.size(); ++k) index_[l].emplace(b[k], static_cast<int>(k));
  }
  for (int l = 0; l < L; ++l) {
    SparseMatrix m(static_cast<int>(basis_[l + 1].size()), static_cast<int>(basis_[l].size()));
    for (std::size_t c = 0; c < basis_[l].size(); ++c) {
      InjectiveElement img = injective_differential(quiver_, basis_[l][c]);
      for (const auto& [t, x] : img.terms()) {
        m.add(index(l + 1, t), static_cast<int>(c), x);
      }
    }
    matrices_.emplace(l, std::move(m));
  }
}

int InjectiveWindow::index(int l, const InjectiveVector& v) const {
  auto it = index_.find(l);
  if (it == index_.end()) return -1;
  auto jt = it->second.find(v);
  return jt == it->second.end() ? -1 : jt->second;
}

namespace {

std::string describe(const Quiver& q, const InjectiveVector& v) {
  std::string head = v.is_vertex_type() ? "e(" + q.vertex_id(v.vertex()) + ")#" : q.arrow(v.arrow).id + "#";
  return head + " z(q\"" + (v.q.is_trivial() ? std::string() : q.path_to_string(v.q)) + "\")";
}

}  // namespace

InjectiveResolution build_M_resolution(const Quiver& q, int L, int N) {
  InjectiveWindow w(q, L, N);
  Certificate cert("injective-resolution", "the complex of injectives resolves the semisimple module kQ_0",
                   q.name(), WindowSpec{0, L, N});
  for (int l = 0; l <= L; ++l) cert.dimensions["l" + std::to_string(l)] = w.basis(l).size();

  auto kernel0 = kernel_basis(w.matrix(0));
  cert.require(static_cast<int>(kernel0.size()) == q.vertex_count(), [&] {
    return "kernel in degree 0 has dimension " + std::to_string(kernel0.size());
  });
  for (VertexIndex i = 0; i < q.vertex_count(); ++i) {
    int c = w.index(0, InjectiveVector{q.trivial_path(i), -1});
    cert.require(w.matrix(0).column(c).empty(), [&] { return "augmentation image at vertex " + q.vertex_id(i) + " is not a cycle"; });
  }
  cert.dimensions["kernel_l0"] = kernel0.size();

  for (int l = 1; l < L; ++l) {
    cert.require(w.matrix(l).multiply(w.matrix(l - 1)).is_zero(),
                 [&] { return "d^" + std::to_string(l) + " d^" + std::to_string(l - 1) + " is nonzero"; });
    std::size_t image = rank(w.matrix(l - 1));
    std::size_t kernel = w.basis(l).size() - rank(w.matrix(l));
    cert.require(image == kernel, [&] {
      return "degree " + std::to_string(l) + ": kernel " + std::to_string(kernel) + " vs image " + std::to_string(image);
    });
  }

  for (int l = 0; l < L; ++l) {
    WPartition part;
    const auto& dom = w.basis(l);
    for (std::size_t k = 0; k < dom.size(); ++k) (dom[k].is_vertex_type() ? part.b0 : part.b1).push_back(static_cast<int>(k));
    for (std::size_t k = 0; k < w.basis(l + 1).size(); ++k) part.b1_prime.push_back(static_cast<int>(k));
    IndexLabeler label = [&](bool row, int i) {
      return describe(q, row ? w.basis(l + 1).at(static_cast<std::size_t>(i)) : dom.at(static_cast<std::size_t>(i)));
    };
    Certificate wc = check_condition_W(w.matrix(l), part, label);
    wc.quiver = q.name();
    wc.dimensions["degree"] = l;
    cert.adopt(std::move(wc));
  }
  return {std::move(w), std::move(cert)};
}

namespace {

using HomValue = std::vector<InjectiveElement>;  // value on each dual basis vector

// dim Hom_A(D(A_A), I_i), by solving the A-linearity equations.
std::size_t hom_dimension(const Quiver& q, VertexIndex i) {
  std::vector<InjectiveVector> target{InjectiveVector{q.trivial_path(i), -1}};
  for (ArrowIndex a : q.incoming(i)) target.push_back(InjectiveVector{q.trivial_path(i), a});
  int dim_d = dual_dimension(q);
  int dim_i = static_cast<int>(target.size());
  auto coord = [&](int u, int w) { return u * dim_i + w; };
  std::vector<SparseVector> equations;
  for (const AlgebraGenerator& a : algebra_generators(q)) {
    for (int u = 0; u < dim_d; ++u) {
      std::vector<SparseVector> rows(static_cast<std::size_t>(dim_i));
      int au = dual_left_action(q, a, u);
      if (au >= 0) {
        for (int w = 0; w < dim_i; ++w) axpy(rows[static_cast<std::size_t>(w)], 1, SparseVector{{coord(au, w), Scalar(1)}});
      }
      for (int w = 0; w < dim_i; ++w) {
        InjectiveElement aw = injective_left_action(q, a, InjectiveElement::from_term(target[static_cast<std::size_t>(w)]));
        for (const auto& [v, c] : aw.terms()) {
          int w2 = static_cast<int>(std::find(target.begin(), target.end(), v) - target.begin());
          axpy(rows[static_cast<std::size_t>(w2)], -c, SparseVector{{coord(u, w), Scalar(1)}});
        }
      }
      for (auto& r : rows) {
        if (!r.empty()) equations.push_back(std::move(r));
      }
    }
  }
  SparseMatrix m(dim_d * dim_i, static_cast<int>(equations.size()));
  for (std::size_t k = 0; k < equations.size(); ++k) m.set_column(static_cast<int>(k), equations[k]);
  return static_cast<std::size_t>(dim_d * dim_i) - rank(m);
}

HomValue nakayama_image(const Quiver& q, const BasisVector& v) {
  int nv = q.vertex_count();
  HomValue g(static_cast<std::size_t>(dual_dimension(q)));
  VertexIndex i = v.vertex();
  const Path& path = v.pair.q;
  g[static_cast<std::size_t>(i)].add_term(InjectiveVector{path, -1}, 1);
  for (ArrowIndex b : q.incoming(i)) g[static_cast<std::size_t>(nv + b)].add_term(InjectiveVector{path, b}, 1);
  if (v.is_vertex_type()) return g;
  // a z = a . (e_i z), and (a . g)(u) = g(u . a).
  AlgebraGenerator a{true, v.arrow};
  HomValue ag(g.size());
  for (int u = 0; u < dual_dimension(q); ++u) {
    int ua = dual_right_action(q, u, a);
    if (ua >= 0) ag[static_cast<std::size_t>(u)] = g[static_cast<std::size_t>(ua)];
  }
  return ag;
}

}  // namespace

Certificate nakayama_compare(const Quiver& q, int L, int N, IntertwinerControl control) {
  Certificate cert("nakayama-intertwiner",
                   "the maps into Hom_A(D(A_A), M) are isomorphisms intertwining the differentials", q.name(),
                   WindowSpec{0, L, N});
  ComplexWindow k = subcomplex_K(build_window(q, 0, L, N)).window;
  InjectiveWindow m(q, L, N);
  int dim_d = dual_dimension(q);
  std::vector<std::size_t> hom_dims;
  for (VertexIndex i = 0; i < q.vertex_count(); ++i) {
    hom_dims.push_back(hom_dimension(q, i));
    cert.require(hom_dims.back() == 1 + q.outgoing(i).size(), [&] {
      return "Hom_A(D(A), I_" + q.vertex_id(i) + ") has dimension " + std::to_string(hom_dims.back());
    });
  }

  std::map<int, SparseMatrix> f;
  for (int l = 0; l <= L; ++l) {
    const auto& dom = k.basis(l);
    int dim_m = static_cast<int>(m.basis(l).size());
    SparseMatrix fl(dim_d * dim_m, static_cast<int>(dom.size()));
    for (std::size_t c = 0; c < dom.size(); ++c) {
      HomValue g = nakayama_image(q, dom[c]);
      for (const AlgebraGenerator& a : algebra_generators(q)) {
        for (int u = 0; u < dim_d; ++u) {
          int au = dual_left_action(q, a, u);
          InjectiveElement lhs = au >= 0 ? g[static_cast<std::size_t>(au)] : InjectiveElement{};
          InjectiveElement rhs = injective_left_action(q, a, g[static_cast<std::size_t>(u)]);
          cert.require(lhs == rhs, [&] { return "image of column " + std::to_string(c) + " in degree " + std::to_string(l) + " is not A-linear"; });
        }
      }
      for (int u = 0; u < dim_d; ++u) {
        for (const auto& [v, x] : g[static_cast<std::size_t>(u)].terms()) {
          int wi = m.index(l, v);
          if (!cert.require(wi >= 0, [&] { return describe(q, v) + " is outside the injective window"; })) continue;
          fl.add(u * dim_m + wi, static_cast<int>(c), x);
        }
      }
    }
    std::size_t hom_dim = 0;
    for (const InjectiveVector& v : m.basis(l)) {
      if (v.is_vertex_type()) hom_dim += hom_dims[static_cast<std::size_t>(v.vertex())];
    }
    std::size_t r = rank(fl);
    cert.require(r == dom.size() && hom_dim == dom.size(), [&] {
      return "degree " + std::to_string(l) + ": rank " + std::to_string(r) + ", source " + std::to_string(dom.size()) +
             ", Hom dimension " + std::to_string(hom_dim);
    });
    cert.dimensions["l" + std::to_string(l)] = dom.size();
    f.emplace(l, std::move(fl));
  }

  for (int l = 0; l < L; ++l) {
    SparseMatrix delta = k.matrix(l);
    if (control == IntertwinerControl::kSignFlippedDelta) {
      SparseMatrix neg(delta.rows(), delta.cols());
      for (int c = 0; c < delta.cols(); ++c) {
        for (const auto& [r, x] : delta.column(c)) neg.set(r, c, -x);
      }
      delta = std::move(neg);
    }
    SparseMatrix rhs = f.at(l + 1).multiply(delta);
    int dim_m = static_cast<int>(m.basis(l).size());
    int dim_m1 = static_cast<int>(m.basis(l + 1).size());
    SparseMatrix hom_d(dim_d * dim_m1, dim_d * dim_m);
    for (int u = 0; u < dim_d; ++u) {
      for (int w = 0; w < dim_m; ++w) {
        for (const auto& [r, x] : m.matrix(l).column(w)) hom_d.set(u * dim_m1 + r, u * dim_m + w, x);
      }
    }
    SparseMatrix lhs = hom_d.multiply(f.at(l));
    if (lhs == rhs) continue;
    for (int c = 0; c < lhs.cols(); ++c) {
      if (lhs.column(c) != rhs.column(c)) {
        cert.fail("degree " + std::to_string(l) + ": intertwining fails on column " + std::to_string(c));
        break;
      }
    }
  }
  return cert;
}

}  // namespace leavitt
