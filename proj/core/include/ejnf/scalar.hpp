#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ejnf {

// Arbitrary-precision rational, always stored in lowest terms with a positive
// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Exact complex number re + im·i with rational parts, i.e. an element of ℚ(i).
///
/// Comparison is lexicographic on (re, im). This is a canonical sort order
/// used for deterministic output, not a field order.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  template <std::integral T>
  GaussianRational(T value) : re_(static_cast<long>(value)), im_(0) {}
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  // |z|², always rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  // Throws Error(ZeroDenominator) on zero.
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs += rhs;
  }
  friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs -= rhs;
  }
  friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs *= rhs;
  }
  friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs /= rhs;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend std::strong_ordering operator<=>(const GaussianRational& a,
                                          const GaussianRational& b) {
    if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
    int c = cmp(a.im_, b.im_);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  Rational re_;
  Rational im_;
};

using Scalar = GaussianRational;

// Scalar text grammar:
//   rational := ["-"] digits ["/" digits]
//   gaussian := rational | [rational ("+"|"-")] rational "i" | rational "i"
// A bare "i" coefficient ("i", "-i", "2+i") is also accepted on input.
GaussianRational parse_scalar(std::string_view text);
std::string format_scalar(const GaussianRational& z);
std::string format_rational(const Rational& q);

/// Square root in ℚ(i). Returns the root w with re(w) > 0, or re(w) = 0 and
/// im(w) >= 0; nullopt when z has no square root in ℚ(i).
std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z);

/// Square root of a non-negative rational, when it is rational.
std::optional<Rational> rational_sqrt(const Rational& q);

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << format_scalar(z);
}

}  // namespace ejnf
