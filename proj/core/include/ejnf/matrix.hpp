#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "ejnf/polynomial.hpp"
#include "ejnf/scalar.hpp"

namespace ejnf {

/// Dense row-major matrix over ℚ(i). Equality is exact and entrywise.
/// Column vectors are matrices with a single column.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix identity(std::size_t n);
  static Matrix column(std::span<const Scalar> entries);
  static Matrix column(std::initializer_list<Scalar> entries) {
    return column(std::span<const Scalar>(entries.begin(), entries.size()));
  }
  static Matrix unit(std::size_t n, std::size_t k);
  // Columns placed side by side; all must have the same row count.
  static Matrix hstack(std::span<const Matrix> blocks, std::size_t rows);
  static Matrix block_diagonal(std::span<const Matrix> blocks);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix col(std::size_t c) const;
  void set_col(std::size_t c, const Matrix& v);
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  void swap_rows(std::size_t a, std::size_t b);

  bool is_zero() const;
  bool is_upper_triangular() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// A − λI.
Matrix shifted(const Matrix& a, const Scalar& lambda);

/// Linearly independent columns of a common ambient space.
struct Basis {
  std::size_t ambient_dim = 0;
  std::vector<Matrix> vectors;

  std::size_t size() const noexcept { return vectors.size(); }
  bool empty() const noexcept { return vectors.empty(); }
  // ambient_dim × size() matrix with the vectors as columns.
  Matrix as_matrix() const { return Matrix::hstack(vectors, ambient_dim); }
  friend bool operator==(const Basis&, const Basis&) = default;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. The pivot is the first nonzero entry scanning
/// down the current column.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Kernel basis: one vector per free column of the RREF, that free variable
/// set to 1 and the other free variables to 0, ordered by free-column index.
Basis nullspace_basis(const Matrix& m);
/// The pivot columns of m, taken from m itself.
Basis colspace_basis(const Matrix& m);

/// Solution of m·x = b with all free variables zero, or nullopt when the
/// system is inconsistent. Throws DimensionMismatch.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// Throws Singular when m is not invertible.
Matrix inverse(const Matrix& m);

/// Extends an independent set to an invertible matrix by appending the
/// standard basis vectors e₁..eₙ that are independent of the columns so far.
Matrix complete_basis(const Basis& partial);

/// Monic polynomial P of least degree with P(a)·v = 0.
Polynomial krylov_annihilator(const Matrix& a, const Matrix& v);

/// P(a) by Horner's rule.
Matrix evaluate(const Polynomial& p, const Matrix& a);

}  // namespace ejnf
