#include "leavitt/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "leavitt/literal.hpp"

namespace leavitt {

namespace {

const std::vector<BasisVector> kEmptyBasis;
const std::vector<std::pair<int, BasisVector>> kEmptyList;

}  // namespace

ModuleElement apply_rule(const Quiver& q, DifferentialRule rule, const BasisVector& v) {
  if (rule == DifferentialRule::kDeltaTilde && v.is_vertex_type() && v.pair.p.length() == 1) return {};
  return differential(q, v);
}

ComplexWindow::ComplexWindow(Quiver q, WindowSpec spec, std::string label, DifferentialRule rule,
                             const Selector& keep)
    : quiver_(std::move(q)), spec_(spec), label_(std::move(label)), rule_(rule) {
  if (spec_.l_min > spec_.l_max) throw std::invalid_argument("window needs l_min <= l_max");
  if (spec_.N < 0) throw std::invalid_argument("window needs N >= 0");
  for (int l = spec_.l_min; l <= spec_.l_max; ++l) {
    std::vector<BasisVector>& b = basis_[l];
    for (VertexIndex i = 0; i < quiver_.vertex_count(); ++i) {
      for (const AssociatedPair& pair : enumerate_lambda(quiver_, i, l, spec_.N)) {
        BasisVector v = BasisVector::vertex_type(pair);
        if (!keep || keep(v)) b.push_back(v);
        for (ArrowIndex a : quiver_.outgoing(i)) {
          BasisVector u = BasisVector::arrow_type(a, pair);
          if (!keep || keep(u)) b.push_back(u);
        }
      }
    }
    std::sort(b.begin(), b.end());
    auto& idx = index_[l];
    for (std::size_t k = 0; k < b.size(); ++k) idx.emplace(b[k], static_cast<int>(k));
  }
  for (int l = spec_.l_min; l < spec_.l_max; ++l) {
    const auto& dom = basis_[l];
    SparseMatrix m(static_cast<int>(basis_[l + 1].size()), static_cast<int>(dom.size()));
    for (std::size_t c = 0; c < dom.size(); ++c) {
      ModuleElement img = image(dom[c]);
      for (const auto& [t, coeff] : img.terms()) {
        int r = index(l + 1, t);
        if (r >= 0) {
          m.add(r, static_cast<int>(c), coeff);
        } else if (t.pair.total_length() > spec_.N) {
          overflow_[l].emplace_back(static_cast<int>(c), t);
        } else {
          escapes_[l].emplace_back(static_cast<int>(c), t);
        }
      }
    }
    matrices_.emplace(l, std::move(m));
  }
}

const std::vector<BasisVector>& ComplexWindow::basis(int l) const {
  auto it = basis_.find(l);
  return it == basis_.end() ? kEmptyBasis : it->second;
}

int ComplexWindow::index(int l, const BasisVector& v) const {
  auto it = index_.find(l);
  if (it == index_.end()) return -1;
  auto jt = it->second.find(v);
  return jt == it->second.end() ? -1 : jt->second;
}

const SparseMatrix& ComplexWindow::matrix(int l) const {
  auto it = matrices_.find(l);
  if (it == matrices_.end()) throw std::out_of_range("no differential matrix at degree " + std::to_string(l));
  return it->second;
}

void ComplexWindow::replace_matrix(int l, SparseMatrix m) {
  const SparseMatrix& old = matrix(l);
  if (m.rows() != old.rows() || m.cols() != old.cols()) throw std::invalid_argument("replacement has wrong shape");
  matrices_[l] = std::move(m);
}

const std::vector<std::pair<int, BasisVector>>& ComplexWindow::overflow(int l) const {
  auto it = overflow_.find(l);
  return it == overflow_.end() ? kEmptyList : it->second;
}

const std::vector<std::pair<int, BasisVector>>& ComplexWindow::escapes(int l) const {
  auto it = escapes_.find(l);
  return it == escapes_.end() ? kEmptyList : it->second;
}

bool ComplexWindow::is_complete(const BasisVector& v) const {
  if (!v.is_vertex_type() || !v.pair.p.is_trivial()) return true;
  return v.pair.total_length() <= spec_.N - 2;
}

SparseVector ComplexWindow::coordinates(int l, const ModuleElement& m) const {
  SparseVector x;
  for (const auto& [v, c] : m.terms()) {
    int i = index(l, v);
    if (i < 0) throw std::out_of_range(format_vector(quiver_, v) + " is not in the degree " + std::to_string(l) + " window");
    x.emplace(i, c);
  }
  return x;
}

ModuleElement ComplexWindow::element(int l, const SparseVector& x) const {
  ModuleElement m;
  const auto& b = basis(l);
  for (const auto& [i, c] : x) m.add_term(b.at(static_cast<std::size_t>(i)), c);
  return m;
}

ComplexWindow build_window(const Quiver& q, int l_min, int l_max, int N) {
  return ComplexWindow(q, WindowSpec{l_min, l_max, N});
}

BasisPartition partition_basis(const ComplexWindow& w, int l) {
  BasisPartition part;
  const Quiver& q = w.quiver();
  const auto& b = w.basis(l);
  for (std::size_t k = 0; k < b.size(); ++k) {
    const BasisVector& v = b[k];
    int i = static_cast<int>(k);
    if (!v.is_vertex_type()) {
      part.b0.push_back(i);
    } else if (l >= 0 && v.pair.p.is_trivial()) {
      part.b2.push_back(i);
    } else {
      part.b1.push_back(i);
    }
    bool prime0 = !v.is_vertex_type() && v.pair.p.is_trivial() && !v.pair.q.is_trivial() &&
                  v.arrow == v.pair.q.first_arrow() && q.is_associated(v.arrow);
    (prime0 ? part.b0_prime : part.b1_prime).push_back(i);
  }
  return part;
}

Certificate check_condition_W(const SparseMatrix& f, const WPartition& part, const IndexLabeler& label) {
  Certificate cert("condition-W",
                   "B0 is a basis of the kernel and f(B1) together with the b0 vectors is a basis of the image", "");
  auto name = [&](bool row, int i) {
    return label ? label(row, i) : std::string(row ? "row " : "column ") + std::to_string(i);
  };
  std::vector<int> column_role(static_cast<std::size_t>(f.cols()), -1);
  std::vector<int> row_role(static_cast<std::size_t>(f.rows()), -1);
  auto assign = [&](std::vector<int>& roles, const std::vector<int>& idx, int role, bool row) {
    for (int i : idx) {
      if (i < 0 || i >= static_cast<int>(roles.size())) {
        cert.fail("partition index " + std::to_string(i) + " out of range");
        continue;
      }
      if (roles[static_cast<std::size_t>(i)] != -1) cert.fail(name(row, i) + " lies in two partition classes");
      roles[static_cast<std::size_t>(i)] = role;
    }
  };
  assign(column_role, part.b0, 0, false);
  assign(column_role, part.b1, 1, false);
  assign(column_role, part.b2, 2, false);
  assign(row_role, part.b0_prime, 0, true);
  assign(row_role, part.b1_prime, 1, true);
  for (std::size_t c = 0; c < column_role.size(); ++c) {
    cert.require(column_role[c] != -1, [&] { return name(false, static_cast<int>(c)) + " is in no class"; });
  }
  for (std::size_t r = 0; r < row_role.size(); ++r) {
    cert.require(row_role[r] != -1, [&] { return name(true, static_cast<int>(r)) + " is in no class"; });
  }
  if (!cert.passed) return cert;

  for (int c : part.b0) {
    cert.require(f.column(c).empty(), [&] { return "(W1) " + name(false, c) + " has nonzero image"; });
  }
  std::map<int, int> b1_image;  // row -> column
  for (int c : part.b1) {
    const SparseVector& col = f.column(c);
    bool single = col.size() == 1 && col.begin()->second.is_one();
    if (!cert.require(single, [&] { return "(W2) image of " + name(false, c) + " is not a single basis vector"; })) {
      continue;
    }
    int r = col.begin()->first;
    cert.require(row_role[static_cast<std::size_t>(r)] == 1,
                 [&] { return "(W2) image of " + name(false, c) + " lies outside B1'"; });
    bool fresh = b1_image.emplace(r, c).second;
    cert.require(fresh, [&] { return "(W2) " + name(false, c) + " and another B1 vector share the image " + name(true, r); });
  }
  std::set<int> b0_rows;
  std::vector<int> b0_of_b2;
  for (int c : part.b2) {
    std::optional<int> b0;
    bool ok = true;
    for (const auto& [r, x] : f.column(c)) {
      if (row_role[static_cast<std::size_t>(r)] == 0) {
        if (b0 || !x.is_one()) ok = false;
        b0 = r;
      } else if (!x.is_one() || !b1_image.count(r)) {
        ok = false;
      }
    }
    if (!cert.require(ok && b0.has_value(), [&] {
          return "(W3) image of " + name(false, c) + " is not b0 plus images of B1 vectors";
        })) {
      continue;
    }
    cert.require(b0_rows.insert(*b0).second, [&] { return "(W3) b0 vector " + name(true, *b0) + " is repeated"; });
    b0_of_b2.push_back(*b0);
  }

  std::size_t r = rank(f);
  std::size_t kernel_dim = static_cast<std::size_t>(f.cols()) - r;
  cert.require(kernel_dim == part.b0.size(), [&] {
    return "kernel has dimension " + std::to_string(kernel_dim) + " but B0 has " + std::to_string(part.b0.size());
  });
  cert.require(r == part.b1.size() + part.b2.size(), [&] {
    return "rank " + std::to_string(r) + " differs from |B1| + |B2| = " + std::to_string(part.b1.size() + part.b2.size());
  });
  if (cert.passed) {
    EchelonBasis image;
    for (int c = 0; c < f.cols(); ++c) image.insert(f.column(c));
    std::vector<int> predicted;
    for (const auto& kv : b1_image) predicted.push_back(kv.first);
    predicted.insert(predicted.end(), b0_of_b2.begin(), b0_of_b2.end());
    for (int row : predicted) {
      cert.require(image.contains(SparseVector{{row, Scalar(1)}}),
                   [&] { return name(true, row) + " is predicted in the image but is not"; });
    }
  }
  cert.dimensions["domain"] = f.cols();
  cert.dimensions["codomain"] = f.rows();
  cert.dimensions["B0"] = part.b0.size();
  cert.dimensions["B1"] = part.b1.size();
  cert.dimensions["B2"] = part.b2.size();
  cert.dimensions["B0'"] = part.b0_prime.size();
  cert.dimensions["B1'"] = part.b1_prime.size();
  cert.dimensions["rank"] = r;
  return cert;
}

Certificate check_delta_condition_W(const ComplexWindow& w, int l) {
  const auto& dom = w.basis(l);
  std::vector<int> cols;
  std::vector<int> position(dom.size(), -1);
  for (std::size_t k = 0; k < dom.size(); ++k) {
    if (w.is_complete(dom[k])) {
      position[k] = static_cast<int>(cols.size());
      cols.push_back(static_cast<int>(k));
    }
  }
  BasisPartition src = partition_basis(w, l);
  BasisPartition dst = partition_basis(w, l + 1);
  WPartition part;
  auto remap = [&](const std::vector<int>& from, std::vector<int>& to) {
    for (int i : from) {
      if (position[static_cast<std::size_t>(i)] >= 0) to.push_back(position[static_cast<std::size_t>(i)]);
    }
  };
  remap(src.b0, part.b0);
  remap(src.b1, part.b1);
  remap(src.b2, part.b2);
  part.b0_prime = dst.b0_prime;
  part.b1_prime = dst.b1_prime;
  const Quiver& q = w.quiver();
  IndexLabeler label = [&](bool row, int i) {
    return row ? format_vector(q, w.basis(l + 1).at(static_cast<std::size_t>(i)))
               : format_vector(q, dom.at(static_cast<std::size_t>(cols.at(static_cast<std::size_t>(i)))));
  };
  Certificate cert = check_condition_W(w.matrix(l).select_columns(cols), part, label);
  cert.quiver = q.name();
  cert.window = w.spec();
  cert.dimensions["degree"] = l;
  for (const auto& [c, v] : w.overflow(l)) {
    if (position[static_cast<std::size_t>(c)] >= 0) {
      cert.fail("complete column " + format_vector(q, dom[static_cast<std::size_t>(c)]) + " overflows to " +
                format_vector(q, v));
    }
  }
  return cert;
}

Certificate verify_delta_squared(const ComplexWindow& w) {
  Certificate cert("delta-squared", "the differential squares to zero on interior vectors", w.quiver().name(), w.spec());
  const Quiver& q = w.quiver();
  for (int l = w.l_min(); l + 2 <= w.l_max(); ++l) {
    SparseMatrix dd = w.matrix(l + 1).multiply(w.matrix(l));
    const auto& dom = w.basis(l);
    std::size_t checked = 0;
    for (std::size_t c = 0; c < dom.size(); ++c) {
      if (!w.is_interior(dom[c])) continue;
      ++checked;
      cert.require(dd.column(static_cast<int>(c)).empty(), [&] {
        return "degree " + std::to_string(l) + ": double image of " + format_vector(q, dom[c]) + " is nonzero";
      });
    }
    for (int k : {l, l + 1}) {
      for (const auto& [c, v] : w.overflow(k)) {
        cert.require(!w.is_interior(w.basis(k)[static_cast<std::size_t>(c)]), [&, k] {
          return "interior vector " + format_vector(q, w.basis(k)[static_cast<std::size_t>(c)]) + " overflows";
        });
      }
    }
    cert.dimensions["interior_columns_l" + std::to_string(l)] = checked;
  }
  return cert;
}

namespace {

// Explicit preimage of an arrow-type vector a z(p, q) of degree l + 1 with
// l(p) + l(q) <= N - 1, as a combination of degree-l basis vectors.
ModuleElement arrow_preimage(const Quiver& q, const BasisVector& v) {
  ArrowIndex a = v.arrow;
  const Path& p = v.pair.p;
  const Path& qq = v.pair.q;
  Path ap = q.compose(q.arrow_path(a), p);
  ModuleElement out;
  if (is_associated_pair(ap, qq, q)) {
    out.add_term(BasisVector::vertex_type(AssociatedPair{ap, qq}), 1);
    return out;
  }
  // Here p is trivial and q = q~ a with a associated.
  auto [hat, tilde] = truncations(q, qq);
  VertexIndex i = q.target(a);
  out.add_term(BasisVector::vertex_type(AssociatedPair{q.trivial_path(i), tilde}), 1);
  for (ArrowIndex b : t_set(q, a)) {
    Path bp = q.arrow_path(b);
    out.add_term(BasisVector::vertex_type(AssociatedPair{bp, q.compose(tilde, bp)}), -1);
  }
  return out;
}

}  // namespace

Certificate verify_acyclicity(const ComplexWindow& w) {
  Certificate cert("acyclicity", "the arrow-type vectors are a basis of kernel and image; interior homology vanishes",
                   w.quiver().name(), w.spec());
  const Quiver& q = w.quiver();
  for (int l = w.l_min(); l < w.l_max(); ++l) {
    Certificate deg("acyclicity-degree", "kernel and image of the differential at one degree", q.name(), w.spec());
    deg.dimensions["degree"] = l;
    const auto& dom = w.basis(l);
    const SparseMatrix& m = w.matrix(l);
    BasisPartition part = partition_basis(w, l);
    std::vector<int> interior_b1;
    for (int c : part.b0) {
      if (!w.is_interior(dom[static_cast<std::size_t>(c)])) continue;
      deg.require(m.column(c).empty(),
                  [&] { return "(i) " + format_vector(q, dom[static_cast<std::size_t>(c)]) + " has nonzero image"; });
    }
    for (int c : part.b1) {
      if (w.is_interior(dom[static_cast<std::size_t>(c)])) interior_b1.push_back(c);
    }
    std::size_t r = rank(m.select_columns(interior_b1));
    deg.require(r == interior_b1.size(), [&] {
      return "(ii) differential has rank " + std::to_string(r) + " on " + std::to_string(interior_b1.size()) +
             " interior B1 vectors";
    });
    std::size_t preimages = 0;
    for (const BasisVector& target : w.basis(l + 1)) {
      if (target.is_vertex_type() || target.pair.total_length() > w.N() - 1) continue;
      ModuleElement pre = arrow_preimage(q, target);
      SparseVector x;
      try {
        x = w.coordinates(l, pre);
      } catch (const std::out_of_range& e) {
        deg.fail(std::string("(iii) preimage outside the window: ") + e.what());
        continue;
      }
      SparseVector expect{{w.index(l + 1, target), Scalar(1)}};
      deg.require(m.apply(x) == expect, [&] {
        return "(iii) " + format_element(q, pre) + " does not map to " + format_vector(q, target);
      });
      ++preimages;
    }
    deg.dimensions["interior_B1"] = interior_b1.size();
    deg.dimensions["explicit_preimages"] = preimages;

    if (l > w.l_min()) {
      std::vector<int> interior;
      for (std::size_t c = 0; c < dom.size(); ++c) {
        if (w.is_interior(dom[c])) interior.push_back(static_cast<int>(c));
      }
      auto kernel = kernel_basis(m.select_columns(interior));
      EchelonBasis image;
      const SparseMatrix& prev = w.matrix(l - 1);
      const auto& prev_dom = w.basis(l - 1);
      for (std::size_t c = 0; c < prev_dom.size(); ++c) {
        if (w.is_complete(prev_dom[c])) image.insert(prev.column(static_cast<int>(c)));
      }
      for (const SparseVector& z : kernel) {
        SparseVector full;
        for (const auto& [k, v] : z) full.emplace(interior[static_cast<std::size_t>(k)], v);
        deg.require(image.contains(full), [&] {
          return "interior cycle " + format_element(q, w.element(l, full)) + " is not a boundary";
        });
      }
      deg.dimensions["interior_kernel"] = kernel.size();
    }
    cert.adopt(std::move(deg));
  }
  return cert;
}

SubWindowResult subcomplex_K(const ComplexWindow& w) {
  ComplexWindow k(w.quiver(), w.spec(), "K", DifferentialRule::kDelta,
                  [](const BasisVector& v) { return v.pair.p.is_trivial(); });
  Certificate cert("subcomplex-K", "vectors with trivial p span a subcomplex vanishing in negative degrees",
                   w.quiver().name(), w.spec());
  for (int l = k.l_min(); l <= k.l_max(); ++l) {
    cert.dimensions["l" + std::to_string(l)] = k.basis(l).size();
    if (l < 0) {
      cert.require(k.basis(l).empty(), [&] { return "K is nonzero in degree " + std::to_string(l); });
    }
    if (l < k.l_max() && !k.escapes(l).empty()) {
      const auto& [c, v] = k.escapes(l).front();
      cert.fail("image of " + format_vector(w.quiver(), k.basis(l)[static_cast<std::size_t>(c)]) + " leaves K at " +
                format_vector(w.quiver(), v));
    }
  }
  return {std::move(k), std::move(cert)};
}

SubWindowResult cokernel_C(const ComplexWindow& w) {
  ComplexWindow c(w.quiver(), w.spec(), "C", DifferentialRule::kDeltaTilde,
                  [](const BasisVector& v) { return !v.pair.p.is_trivial(); });
  Certificate cert("cokernel-C", "the quotient by K with its modified differential is a complex agreeing with P in negative degrees",
                   w.quiver().name(), w.spec());
  for (int l = c.l_min(); l <= c.l_max(); ++l) {
    cert.dimensions["l" + std::to_string(l)] = c.basis(l).size();
    if (l < 0) {
      cert.require(c.basis(l) == w.basis(l), [&] { return "C differs from P in degree " + std::to_string(l); });
    }
    if (l < c.l_max() && !c.escapes(l).empty()) {
      const auto& [col, v] = c.escapes(l).front();
      cert.fail("image of " + format_vector(w.quiver(), c.basis(l)[static_cast<std::size_t>(col)]) + " leaves C at " +
                format_vector(w.quiver(), v));
    }
  }
  for (int l = c.l_min(); l + 2 <= c.l_max(); ++l) {
    SparseMatrix dd = c.matrix(l + 1).multiply(c.matrix(l));
    for (std::size_t col = 0; col < c.basis(l).size(); ++col) {
      if (!c.is_interior(c.basis(l)[col])) continue;
      cert.require(dd.column(static_cast<int>(col)).empty(), [&] {
        return "modified differential squares to nonzero on " + format_vector(w.quiver(), c.basis(l)[col]);
      });
    }
  }
  return {std::move(c), std::move(cert)};
}

SubWindowResult diagonal_C_n(const ComplexWindow& w, int n) {
  if (n < 0) throw std::invalid_argument("diagonal index must be nonnegative");
  ComplexWindow d(w.quiver(), w.spec(), "C_" + std::to_string(n), DifferentialRule::kDeltaTilde,
                  [n](const BasisVector& v) { return !v.pair.p.is_trivial() && v.pair.q.length() == n; });
  Certificate cert("diagonal-C_n", "vectors with l(q) = n span a subcomplex of C vanishing in degrees >= n",
                   w.quiver().name(), w.spec());
  cert.dimensions["n"] = n;
  for (int l = d.l_min(); l <= d.l_max(); ++l) {
    if (l >= n) cert.require(d.basis(l).empty(), [&] { return "C_n is nonzero in degree " + std::to_string(l); });
    if (l < d.l_max() && !d.escapes(l).empty()) {
      const auto& [col, v] = d.escapes(l).front();
      cert.fail("image of " + format_vector(w.quiver(), d.basis(l)[static_cast<std::size_t>(col)]) +
                " leaves the diagonal at " + format_vector(w.quiver(), v));
    }
  }
  return {std::move(d), std::move(cert)};
}

Certificate verify_decomposition(const ComplexWindow& cokernel) {
  const Quiver& q = cokernel.quiver();
  Certificate cert("decomposition", "C is the direct sum of the diagonal subcomplexes C_n", q.name(), cokernel.spec());
  std::vector<ComplexWindow> diagonals;
  for (int n = 0; n <= cokernel.N(); ++n) {
    SubWindowResult d = diagonal_C_n(cokernel, n);
    cert.adopt(std::move(d.certificate));
    diagonals.push_back(std::move(d.window));
  }
  for (int l = cokernel.l_min(); l <= cokernel.l_max(); ++l) {
    const auto& b = cokernel.basis(l);
    std::vector<int> owner(b.size(), -1);
    std::size_t covered = 0;
    for (std::size_t k = 0; k < b.size(); ++k) {
      int count = 0;
      for (std::size_t n = 0; n < diagonals.size(); ++n) {
        if (diagonals[n].index(l, b[k]) >= 0) {
          ++count;
          owner[k] = static_cast<int>(n);
        }
      }
      cert.require(count == 1, [&] {
        return format_vector(q, b[k]) + " lies in " + std::to_string(count) + " diagonals";
      });
      covered += count == 1 ? 1 : 0;
    }
    std::size_t diag_total = 0;
    for (const auto& d : diagonals) diag_total += d.basis(l).size();
    cert.require(diag_total == b.size(), [&] {
      return "diagonal bases in degree " + std::to_string(l) + " do not partition the basis of C";
    });
    if (l >= cokernel.l_max()) continue;
    const SparseMatrix& m = cokernel.matrix(l);
    const auto& target = cokernel.basis(l + 1);
    std::vector<int> target_owner(target.size(), -1);
    for (std::size_t k = 0; k < target.size(); ++k) {
      for (std::size_t n = 0; n < diagonals.size(); ++n) {
        if (diagonals[n].index(l + 1, target[k]) >= 0) target_owner[k] = static_cast<int>(n);
      }
    }
    for (int c = 0; c < m.cols(); ++c) {
      for (const auto& [r, x] : m.column(c)) {
        cert.require(owner[static_cast<std::size_t>(c)] == target_owner[static_cast<std::size_t>(r)], [&] {
          return "cross-diagonal entry from " + format_vector(q, b[static_cast<std::size_t>(c)]) + " to " +
                 format_vector(q, target[static_cast<std::size_t>(r)]);
        });
      }
    }
    cert.dimensions["l" + std::to_string(l)] = covered;
  }
  return cert;
}

}  // namespace leavitt
