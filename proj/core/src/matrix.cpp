#include "ejnf/matrix.hpp"

#include <string>

#include "ejnf/error.hpp"

namespace ejnf {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::DimensionMismatch, "Matrix", "ragged initializer list");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::column(std::span<const Scalar> entries) {
  Matrix m(entries.size(), 1);
  for (std::size_t k = 0; k < entries.size(); ++k) m(k, 0) = entries[k];
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t k) {
  Matrix m(n, 1);
  m(k, 0) = 1;
  return m;
}

Matrix Matrix::hstack(std::span<const Matrix> blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) {
      throw Error(ErrorKind::DimensionMismatch, "hstack",
                  "block " + shape(b) + " does not have " + std::to_string(rows) + " rows");
    }
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    out.set_block(0, c0, b);
    c0 += b.cols();
  }
  return out;
}

Matrix Matrix::block_diagonal(std::span<const Matrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    out.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

Matrix Matrix::col(std::size_t c) const { return block(0, c, rows_, 1); }

void Matrix::set_col(std::size_t c, const Matrix& v) { set_block(0, c, v); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block", "window exceeds " + shape(*this));
  }
  Matrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "set_block",
                shape(b) + " does not fit in " + shape(*this));
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < r && c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (std::size_t k = 0; k < rows_ && k < cols_; ++k) t += (*this)(k, k);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "add", shape(*this) + " + " + shape(rhs));
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "subtract", shape(*this) + " - " + shape(rhs));
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorKind::DimensionMismatch, "multiply", shape(a) + " * " + shape(b));
  }
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

Matrix shifted(const Matrix& a, const Scalar& lambda) {
  Matrix out = a;
  for (std::size_t k = 0; k < a.rows() && k < a.cols(); ++k) out(k, k) -= lambda;
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult result{m, {}};
  Matrix& r = result.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < r.rows() && r(pivot, col).is_zero()) ++pivot;
    if (pivot == r.rows()) continue;
    r.swap_rows(row, pivot);
    Scalar scale = r(row, col).inverse();
    for (std::size_t c = col; c < r.cols(); ++c) r(row, c) *= scale;
    for (std::size_t other = 0; other < r.rows(); ++other) {
      if (other == row || r(other, col).is_zero()) continue;
      Scalar factor = r(other, col);
      for (std::size_t c = col; c < r.cols(); ++c) {
        if (!r(row, c).is_zero()) r(other, c) -= factor * r(row, c);
      }
    }
    result.pivot_cols.push_back(col);
    ++row;
  }
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

Basis nullspace_basis(const Matrix& m) {
  auto [r, pivots] = rref(m);
  Basis basis{m.cols(), {}};
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(m.cols(), 1);
    v(free, 0) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i], 0) = -r(i, free);
    basis.vectors.push_back(std::move(v));
  }
  return basis;
}

Basis colspace_basis(const Matrix& m) {
  Basis basis{m.rows(), {}};
  for (auto p : rref(m).pivot_cols) basis.vectors.push_back(m.col(p));
  return basis;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows() || b.cols() != 1) {
    throw Error(ErrorKind::DimensionMismatch, "solve",
                "matrix " + shape(m) + " with right-hand side " + shape(b));
  }
  Matrix augmented(m.rows(), m.cols() + 1);
  augmented.set_block(0, 0, m);
  augmented.set_block(0, m.cols(), b);
  auto [r, pivots] = rref(augmented);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Matrix x(m.cols(), 1);
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i], 0) = r(i, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "inverse", "non-square matrix " + shape(m));
  }
  const std::size_t n = m.rows();
  Matrix augmented(n, 2 * n);
  augmented.set_block(0, 0, m);
  augmented.set_block(0, n, Matrix::identity(n));
  auto [r, pivots] = rref(augmented);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    std::size_t rk = 0;
    while (rk < pivots.size() && pivots[rk] < n) ++rk;
    throw Error(ErrorKind::Singular, "inverse",
                "rank " + std::to_string(rk) + " < " + std::to_string(n));
  }
  return r.block(0, n, n, n);
}

Matrix complete_basis(const Basis& partial) {
  const std::size_t n = partial.ambient_dim;
  for (const auto& v : partial.vectors) {
    if (v.rows() != n || v.cols() != 1) {
      throw Error(ErrorKind::DimensionMismatch, "complete_basis",
                  "vector " + shape(v) + " in ambient dimension " + std::to_string(n));
    }
  }
  std::vector<Matrix> columns = partial.vectors;
  std::size_t current = rank(Matrix::hstack(columns, n));
  if (current != columns.size()) {
    throw Error(ErrorKind::DependentInput, "complete_basis",
                std::to_string(columns.size()) + " vectors span only dimension " +
                    std::to_string(current));
  }
  for (std::size_t k = 0; k < n && columns.size() < n; ++k) {
    columns.push_back(Matrix::unit(n, k));
    if (rank(Matrix::hstack(columns, n)) == current + 1) {
      ++current;
    } else {
      columns.pop_back();
    }
  }
  return Matrix::hstack(columns, n);
}

Polynomial krylov_annihilator(const Matrix& a, const Matrix& v) {
  if (!a.is_square() || v.rows() != a.rows() || v.cols() != 1) {
    throw Error(ErrorKind::DimensionMismatch, "krylov_annihilator",
                "matrix " + shape(a) + " with vector " + shape(v));
  }
  if (v.is_zero()) {
    throw Error(ErrorKind::ZeroVector, "krylov_annihilator", "starting vector is zero");
  }
  const std::size_t n = a.rows();
  std::vector<Matrix> krylov{v};
  for (std::size_t d = 1; d <= n; ++d) {
    Matrix next = a * krylov.back();
    if (auto c = solve(Matrix::hstack(krylov, n), next)) {
      // next = Σ c_j A^j v  =>  P(z) = z^d − Σ c_j z^j.
      std::vector<Scalar> coeffs(d + 1);
      for (std::size_t j = 0; j < d; ++j) coeffs[j] = -(*c)(j, 0);
      coeffs[d] = 1;
      return Polynomial(std::move(coeffs));
    }
    krylov.push_back(std::move(next));
  }
  throw Error(ErrorKind::InternalInvariantViolation, "krylov_annihilator",
              "no linear dependence among n+1 Krylov vectors");
}

Matrix evaluate(const Polynomial& p, const Matrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "evaluate", "non-square matrix " + shape(a));
  }
  const std::size_t n = a.rows();
  Matrix acc(n, n);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * a;
    for (std::size_t k = 0; k < n; ++k) acc(k, k) += *it;
  }
  return acc;
}

}  // namespace ejnf
