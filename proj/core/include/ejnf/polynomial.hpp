#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ejnf/scalar.hpp"

namespace ejnf {

/// Univariate polynomial over ℚ(i), coefficients in ascending degree. The
/// leading coefficient is never zero; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> ascending);

  static Polynomial constant(Scalar c) { return Polynomial({std::move(c)}); }
  static Polynomial monomial(std::size_t degree);
  // z − root
  static Polynomial linear_factor(const Scalar& root);

  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& leading() const { return coeffs_.back(); }
  Scalar coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(); }
  bool has_real_coefficients() const;

  Scalar operator()(const Scalar& z) const;
  Polynomial monic() const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

// (quotient, remainder); throws ZeroDenominator when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
// Monic greatest common divisor (zero when both are zero).
Polynomial gcd(Polynomial a, Polynomial b);
// Monic least common multiple.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

// Human-readable form in the variable z, e.g. "z^3 - 2".
std::string format_polynomial(const Polynomial& p);

}  // namespace ejnf
