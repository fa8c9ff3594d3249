#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "leavitt/scalar.hpp"

namespace leavitt {

/// Sparse vector over Scalar indexed by basis position; zeros are never stored.
using SparseVector = std::map<int, Scalar>;

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);

/// Column-major sparse matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), columns_(static_cast<std::size_t>(cols)) {}

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(columns_.size()); }

  Scalar at(int r, int c) const;
  void set(int r, int c, const Scalar& v);
  void add(int r, int c, const Scalar& v);
  const SparseVector& column(int c) const { return columns_.at(static_cast<std::size_t>(c)); }
  void set_column(int c, SparseVector v);

  bool is_zero() const;
  std::size_t nonzeros() const;

  SparseMatrix multiply(const SparseMatrix& rhs) const;
  SparseVector apply(const SparseVector& x) const;
  /// Columns listed in `cols`, in that order.
  SparseMatrix select_columns(const std::vector<int>& cols) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int rows_ = 0;
  std::vector<SparseVector> columns_;
};

/// Incrementally maintained row-echelon basis of a subspace. Each stored vector has a
/// distinct leading index with coefficient one.
class EchelonBasis {
 public:
  /// Reduces v against the basis; returns true and stores the remainder if it is nonzero.
  bool insert(SparseVector v);
  bool contains(SparseVector v) const;
  std::size_t dimension() const { return pivots_.size(); }

 private:
  SparseVector reduce(SparseVector v) const;
  std::map<int, SparseVector> pivots_;
};

std::size_t rank(const SparseMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in increasing free-column order.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);
/// Indices of the columns chosen, greedily left to right, as a basis of the column space.
std::vector<int> image_basis(const SparseMatrix& m);
bool in_span(const std::vector<SparseVector>& spanning, const SparseVector& v);

}  // namespace leavitt
