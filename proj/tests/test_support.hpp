#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ejnf/matrix.hpp"

namespace ejnf::testing {

// Seeded generator of small exact scalars and matrices for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(std::int64_t bound = 9) {
    Rational q(Integer(static_cast<long>(integer(-bound, bound))),
               Integer(static_cast<long>(integer(1, bound))));
    q.canonicalize();
    return q;
  }

  Scalar scalar(bool complex = true) {
    if (!complex || rng_() % 2 == 0) return Scalar(rational());
    return Scalar(rational(), rational());
  }

  // Entries often zero so that rank-deficient matrices are common.
  Matrix matrix(std::size_t rows, std::size_t cols, bool complex = false) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng_() % 3 == 0) continue;
        m(r, c) = scalar(complex);
      }
    }
    return m;
  }

  // Low-rank matrix: product of rows×k and k×cols integer factors.
  Matrix low_rank(std::size_t rows, std::size_t cols, std::size_t k) {
    Matrix left(rows, k), right(k, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < k; ++c) left(r, c) = integer(-3, 3);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < cols; ++c) right(r, c) = integer(-3, 3);
    return left * right;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Determinant by cofactor expansion along the first row; independent of
// elimination.
inline Scalar det_cofactor(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Scalar total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    Scalar term = m(0, c) * det_cofactor(minor);
    if (c % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// Inverse via the adjugate.
inline Matrix inverse_adjugate(const Matrix& m) {
  const std::size_t n = m.rows();
  Scalar det = det_cofactor(m);
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Matrix minor(n - 1, n - 1);
      std::size_t rr = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        std::size_t cc = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == c) continue;
          minor(rr, cc++) = m(i, k);
        }
        ++rr;
      }
      Scalar cof = det_cofactor(minor);
      if ((r + c) % 2 == 1) cof = -cof;
      out(c, r) = cof / det;
    }
  }
  return out;
}

inline Matrix col(std::initializer_list<Scalar> v) { return Matrix::column(v); }

}  // namespace ejnf::testing
