#include "leavitt/linalg.hpp"

#include <stdexcept>

namespace leavitt {

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (a.is_zero()) return;
  for (const auto& [i, v] : x) {
    auto [it, inserted] = y.try_emplace(i, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

Scalar SparseMatrix::at(int r, int c) const {
  const SparseVector& col = column(c);
  auto it = col.find(r);
  return it == col.end() ? Scalar(0) : it->second;
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
  if (r < 0 || r >= rows_) throw std::out_of_range("row index out of range");
  SparseVector& col = columns_.at(static_cast<std::size_t>(c));
  if (v.is_zero()) {
    col.erase(r);
  } else {
    col[r] = v;
  }
}

void SparseMatrix::add(int r, int c, const Scalar& v) { set(r, c, at(r, c) + v); }

void SparseMatrix::set_column(int c, SparseVector v) {
  for (const auto& [r, x] : v) {
    if (r < 0 || r >= rows_) throw std::out_of_range("row index out of range");
    if (x.is_zero()) throw std::invalid_argument("explicit zero in sparse column");
  }
  columns_.at(static_cast<std::size_t>(c)) = std::move(v);
}

bool SparseMatrix::is_zero() const {
  for (const auto& col : columns_) {
    if (!col.empty()) return false;
  }
  return true;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (const auto& [c, v] : x) axpy(y, v, column(c));
  return y;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols() != rhs.rows()) throw std::invalid_argument("matrix dimensions do not match");
  SparseMatrix out(rows_, rhs.cols());
  for (int c = 0; c < rhs.cols(); ++c) out.columns_[static_cast<std::size_t>(c)] = apply(rhs.column(c));
  return out;
}

SparseMatrix SparseMatrix::select_columns(const std::vector<int>& cols) const {
  SparseMatrix out(rows_, static_cast<int>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.columns_[k] = column(cols[k]);
  return out;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    int lead = it->first;
    Scalar factor = -it->second;
    axpy(v, factor, p->second);
    it = v.upper_bound(lead);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Scalar inv = Scalar(1) / v.begin()->second;
  for (auto& kv : v) kv.second *= inv;
  int lead = v.begin()->first;
  pivots_.emplace(lead, std::move(v));
  return true;
}

bool EchelonBasis::contains(SparseVector v) const { return reduce(std::move(v)).empty(); }

std::size_t rank(const SparseMatrix& m) {
  EchelonBasis basis;
  for (int c = 0; c < m.cols(); ++c) basis.insert(m.column(c));
  return basis.dimension();
}

std::vector<int> image_basis(const SparseMatrix& m) {
  EchelonBasis basis;
  std::vector<int> chosen;
  for (int c = 0; c < m.cols(); ++c) {
    if (basis.insert(m.column(c))) chosen.push_back(c);
  }
  return chosen;
}

bool in_span(const std::vector<SparseVector>& spanning, const SparseVector& v) {
  EchelonBasis basis;
  for (const auto& s : spanning) basis.insert(s);
  return basis.contains(v);
}

// Gauss-Jordan elimination on the rows of m with exact field division.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  std::vector<SparseVector> rows(static_cast<std::size_t>(m.rows()));
  for (int c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) rows[static_cast<std::size_t>(r)].emplace(c, v);
  }
  std::map<int, SparseVector> pivots;  // leading column -> fully reduced row
  for (auto& row : rows) {
    for (const auto& [lead, prow] : pivots) {
      auto it = row.find(lead);
      if (it != row.end()) axpy(row, -it->second, prow);
    }
    if (row.empty()) continue;
    Scalar inv = Scalar(1) / row.begin()->second;
    for (auto& kv : row) kv.second *= inv;
    int lead = row.begin()->first;
    for (auto& [other_lead, prow] : pivots) {
      auto it = prow.find(lead);
      if (it != prow.end()) axpy(prow, -it->second, row);
    }
    pivots.emplace(lead, std::move(row));
  }
  std::vector<SparseVector> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (pivots.count(f)) continue;
    SparseVector v;
    v.emplace(f, Scalar(1));
    for (const auto& [lead, prow] : pivots) {
      auto it = prow.find(f);
      if (it != prow.end()) v.emplace(lead, -it->second);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace leavitt
