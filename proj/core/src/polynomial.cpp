#include "ejnf/polynomial.hpp"

#include "ejnf/error.hpp"

namespace ejnf {

Polynomial::Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree) {
  std::vector<Scalar> c(degree + 1);
  c.back() = 1;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear_factor(const Scalar& root) { return Polynomial({-root, 1}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::has_real_coefficients() const {
  for (const auto& c : coeffs_) {
    if (!c.is_real()) return false;
  }
  return true;
}

Scalar Polynomial::operator()(const Scalar& z) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Scalar(k);
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) {
    throw Error(ErrorKind::ZeroDenominator, "divmod", "division by the zero polynomial");
  }
  std::vector<Scalar> rem = num.coefficients();
  const auto& d = den.coefficients();
  if (rem.size() < d.size()) return {Polynomial(), num};
  Scalar lead_inv = den.leading().inverse();
  std::vector<Scalar> quot(rem.size() - d.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Scalar factor = rem[k + d.size() - 1] * lead_inv;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= factor * d[j];
    quot[k] = std::move(factor);
  }
  rem.resize(d.size() - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return divmod(a * b, gcd(a, b)).first.monic();
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    std::string coeff;
    bool negative = false;
    if (c[k].is_real()) {
      negative = sgn(c[k].re()) < 0;
      coeff = format_rational(negative ? Rational(-c[k].re()) : c[k].re());
    } else {
      coeff = "(" + format_scalar(c[k]) + ")";
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = coeff == "1";
    if (k == 0 || !unit) out += coeff;
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace ejnf
