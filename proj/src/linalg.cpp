#include "hyperdiff/linalg.hpp"

#include "hyperdiff/error.hpp"

#include <utility>

namespace hyperdiff {

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& rows, std::size_t cols) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::InvalidArgument, "ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = col.find(r);
  return it == col.end() ? Rational(0) : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_) throw Error(ErrorKind::InvalidArgument, "row index out of range");
  auto& col = columns_.at(c);
  if (value == 0) col.erase(r);
  else col[r] = value;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_) throw Error(ErrorKind::InvalidArgument, "row index out of range");
  if (value == 0) return;
  auto& col = columns_.at(c);
  auto [it, inserted] = col.try_emplace(r, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) col.erase(it);
  }
}

bool SparseMatrix::is_zero() const noexcept {
  for (const auto& col : columns_) {
    if (!col.empty()) return false;
  }
  return true;
}

std::size_t SparseMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& col : columns_) n += col.size();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace(c, v);
  }
  return t;
}

DenseMatrix SparseMatrix::to_dense() const {
  DenseMatrix d(rows_, DenseVector(cols(), Rational(0)));
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : columns_[c]) d[r][c] = v;
  }
  return d;
}

DenseVector SparseMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols()) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
  DenseVector y(rows_, Rational(0));
  for (std::size_t c = 0; c < cols(); ++c) {
    if (x[c] == 0) continue;
    for (const auto& [r, v] : columns_[c]) y[r] += v * x[c];
  }
  return y;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::InvalidArgument,
                "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (const auto& [k, bv] : b.columns_[c]) {
      for (const auto& [r, av] : a.columns_[k]) out.add(r, c, av * bv);
    }
  }
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::InvalidArgument, "cannot subtract matrices of different shapes");
  }
  SparseMatrix out = a;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (const auto& [r, v] : b.columns_[c]) out.add(r, c, -v);
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols, Integer(0)));
  for (std::size_t c = 0; c < cols; ++c) {
    Integer scale = 1;
    for (const auto& [r, v] : m.column(c)) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(v));
    for (const auto& [r, v] : m.column(c)) {
      a[r][c] = boost::multiprecision::numerator(v) * (scale / boost::multiprecision::denominator(v));
    }
  }

  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / previous;
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    ++r;
  }
  return r;
}

Echelon reduced_echelon(const SparseMatrix& m) {
  Echelon e{m.to_dense(), {}};
  auto& a = e.reduced;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    e.pivot_columns.push_back(c);
    ++r;
  }
  return e;
}

std::vector<DenseVector> kernel_basis(const SparseMatrix& m) {
  const Echelon e = reduced_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<DenseVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    DenseVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      v[e.pivot_columns[i]] = -e.reduced[i][free];
    }
    for (const auto& x : v) {
      if (x == 0) continue;
      const Rational lead = x;
      for (auto& y : v) y /= lead;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<DenseVector> solve(const SparseMatrix& m, std::span<const Rational> y) {
  if (y.size() != m.rows()) throw Error(ErrorKind::InvalidArgument, "right-hand side length mismatch");
  SparseMatrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) augmented.set(r, c, v);
  }
  for (std::size_t r = 0; r < y.size(); ++r) augmented.set(r, m.cols(), y[r]);

  const Echelon e = reduced_echelon(augmented);
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  DenseVector x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
    x[e.pivot_columns[i]] = e.reduced[i][m.cols()];
  }
  return x;
}

SparseMatrix from_columns(std::size_t rows, std::span<const DenseVector> columns) {
  SparseMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::InvalidArgument, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

}  // namespace hyperdiff
