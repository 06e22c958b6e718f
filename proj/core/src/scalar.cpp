#include "ejnf/scalar.hpp"

#include <cctype>

#include "ejnf/error.hpp"

namespace ejnf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DependentInput: return "DependentInput";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::SpectrumNotRepresentable: return "SpectrumNotRepresentable";
    case ErrorKind::InvalidProvidedEigenvalue: return "InvalidProvidedEigenvalue";
    case ErrorKind::IncompleteSpectrum: return "IncompleteSpectrum";
    case ErrorKind::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "UnknownError";
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) {
    throw Error(ErrorKind::ZeroDenominator, "inverse", "division by 0");
  }
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (rhs.is_real()) {
    re_ *= rhs.re_;
    im_ *= rhs.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * rhs.im_;
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorKind::ZeroDenominator, "divide",
                format_scalar(*this) + " / 0");
  }
  if (rhs.is_real()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  return *this *= rhs.inverse();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// rational := ["-"] digits ["/" digits]
Rational parse_rational(std::string_view text, std::string_view whole) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::ParseError, "parse_scalar",
                "malformed scalar '" + std::string(whole) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (sgn(d) == 0) {
    throw Error(ErrorKind::ZeroDenominator, "parse_scalar",
                "zero denominator in '" + std::string(whole) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

// Coefficient of an imaginary part; "" and "-" stand for ±1.
Rational parse_imag_coefficient(std::string_view text, std::string_view whole) {
  if (text.empty()) return 1;
  if (text == "-") return -1;
  return parse_rational(text, whole);
}

}  // namespace

GaussianRational parse_scalar(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorKind::ParseError, "parse_scalar", "empty scalar");
  }
  if (text.back() != 'i') {
    return GaussianRational(parse_rational(text, text));
  }
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return {Rational(0), parse_imag_coefficient(body, text)};
  }
  Rational re = parse_rational(body.substr(0, split), text);
  std::string_view im_text = body.substr(split + 1);
  if (!im_text.empty() && (im_text.front() == '-' || im_text.front() == '+')) {
    throw Error(ErrorKind::ParseError, "parse_scalar",
                "malformed scalar '" + std::string(text) + "'");
  }
  Rational im = parse_imag_coefficient(im_text, text);
  if (body[split] == '-') im = -im;
  return {re, im};
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

std::string format_scalar(const GaussianRational& z) {
  if (z.is_real()) return format_rational(z.re());
  if (sgn(z.re()) == 0) return format_rational(z.im()) + "i";
  std::string out = format_rational(z.re());
  if (sgn(z.im()) > 0) {
    out += '+';
    out += format_rational(z.im());
  } else {
    out += '-';
    out += format_rational(Rational(-z.im()));
  }
  out += 'i';
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Rational root(sqrt(num), sqrt(den));
  root.canonicalize();
  return root;
}

std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z) {
  if (z.is_zero()) return GaussianRational();
  // w = x + yi, w² = z:  x² − y² = a,  2xy = b,  x² + y² = |z|.
  auto modulus = rational_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto x = rational_sqrt((*modulus + z.re()) / 2);
  auto y = rational_sqrt((*modulus - z.re()) / 2);
  if (!x || !y) return std::nullopt;
  Rational im = sgn(z.im()) < 0 ? Rational(-*y) : *y;
  GaussianRational w(*x, im);
  // Normalize to re > 0, or re = 0 and im >= 0.
  if (sgn(w.re()) < 0 || (sgn(w.re()) == 0 && sgn(w.im()) < 0)) w = -w;
  return w;
}

}  // namespace ejnf
