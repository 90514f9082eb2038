#pragma once

#include "hyperdiff/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace hyperdiff {

using DenseVector = std::vector<Rational>;
using DenseMatrix = std::vector<std::vector<Rational>>;  // row-major

/// Exact sparse matrix stored column-major; column c is a map row -> value
/// without explicit zeros.
class SparseMatrix {
 public:
  using Column = std::map<std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const DenseMatrix& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const Column& column(std::size_t c) const { return columns_.at(c); }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);

  bool is_zero() const noexcept;
  std::size_t nonzeros() const noexcept;

  SparseMatrix transpose() const;
  DenseMatrix to_dense() const;
  DenseVector multiply(std::span<const Rational> x) const;

  /// Throws InvalidArgument on a dimension mismatch.
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// Exact rank by fraction-free (Bareiss) elimination. Columns are first
/// scaled to integers, which leaves the rank unchanged.
std::size_t rank(const SparseMatrix& m);

/// Reduced row echelon form over Q.
struct Echelon {
  DenseMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};
Echelon reduced_echelon(const SparseMatrix& m);

/// Kernel basis read off the reduced echelon form, one vector per free
/// column in increasing order, each scaled so its first nonzero entry is 1.
std::vector<DenseVector> kernel_basis(const SparseMatrix& m);

/// Some x with m x = y, or nullopt when y is outside the column space.
std::optional<DenseVector> solve(const SparseMatrix& m, std::span<const Rational> y);

/// Matrix whose columns are the given vectors (all of length `rows`).
SparseMatrix from_columns(std::size_t rows, std::span<const DenseVector> columns);

}  // namespace hyperdiff
