#include "ejnf/spectral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace ejnf {

namespace {

// Trial division stops here; a leftover cofactor is treated as prime.
// FIXME: a composite cofactor above this bound hides some divisors, so a
// root with a huge numerator or denominator could be missed.
constexpr unsigned long kTrialDivisionBound = 1'000'000;
// Largest prime for which a two-squares decomposition is searched.
const Integer kTwoSquaresBound("1000000000000");

std::vector<std::pair<Integer, unsigned>> factor(Integer x) {
  std::vector<std::pair<Integer, unsigned>> out;
  x = abs(x);
  for (unsigned long p = 2; p <= kTrialDivisionBound && Integer(p) * p <= x; ++p) {
    if (mpz_divisible_ui_p(x.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), p) != 0) {
      x /= p;
      ++e;
    }
    out.emplace_back(Integer(p), e);
  }
  if (x > 1) out.emplace_back(x, 1);
  return out;
}

std::vector<Integer> divisors(const Integer& x) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factor(x)) {
    const std::size_t count = out.size();
    Integer power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t j = 0; j < count; ++j) out.push_back(out[j] * power);
    }
  }
  return out;
}

Integer common_denominator(const Polynomial& p) {
  Integer d = 1;
  for (const auto& c : p.coefficients()) {
    d = lcm(d, Integer(c.re().get_den()));
    d = lcm(d, Integer(c.im().get_den()));
  }
  return d;
}

std::vector<Scalar> rational_root_candidates(const Polynomial& p) {
  Integer d = common_denominator(p);
  Integer constant = Rational(p.coefficient(0).re() * d).get_num();
  Integer leading = Rational(p.leading().re() * d).get_num();
  std::set<Scalar> out;
  for (const auto& num : divisors(constant)) {
    for (const auto& den : divisors(leading)) {
      Rational q(num, den);
      q.canonicalize();
      out.insert(Scalar(q));
      out.insert(Scalar(Rational(-q)));
    }
  }
  return {out.begin(), out.end()};
}

// Gaussian integers are kept as GaussianRational values with integral parts.
bool divides(const Scalar& divisor, const Scalar& value) {
  Scalar q = value / divisor;
  return q.re().get_den() == 1 && q.im().get_den() == 1;
}

std::optional<Scalar> two_squares(const Integer& p) {
  if (p > kTwoSquaresBound) return std::nullopt;
  for (Integer a = 1; a * a <= p; ++a) {
    Integer rest = p - a * a;
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
      return Scalar(Rational(a), Rational(sqrt(rest)));
    }
  }
  return std::nullopt;
}

// Divisors of a nonzero Gaussian integer, one representative per associate
// class.
std::vector<Scalar> gaussian_divisors(Scalar g) {
  std::vector<std::pair<Scalar, unsigned>> primes;
  for (const auto& [p, e] : factor(g.norm().get_num())) {
    std::vector<Scalar> candidates;
    if (p == 2) {
      candidates.push_back(Scalar(Rational(1), Rational(1)));
    } else if (p % 4 == 1) {
      auto pi = two_squares(p);
      if (pi) {
        candidates.push_back(*pi);
        candidates.push_back(pi->conj());
      } else {
        candidates.push_back(Scalar(Rational(p)));
      }
    } else {
      candidates.push_back(Scalar(Rational(p)));
    }
    for (const auto& pi : candidates) {
      unsigned k = 0;
      while (divides(pi, g)) {
        g /= pi;
        ++k;
      }
      if (k > 0) primes.emplace_back(pi, k);
    }
  }
  std::vector<Scalar> out{Scalar(1)};
  for (const auto& [pi, e] : primes) {
    const std::size_t count = out.size();
    Scalar power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= pi;
      for (std::size_t j = 0; j < count; ++j) out.push_back(out[j] * power);
    }
  }
  return out;
}

std::vector<Scalar> gaussian_root_candidates(const Polynomial& p) {
  Scalar d(Rational(common_denominator(p)));
  Scalar constant = p.coefficient(0) * d;
  Scalar leading = p.leading() * d;
  const Scalar units[] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  std::set<Scalar> out;
  auto numerators = gaussian_divisors(constant);
  auto denominators = gaussian_divisors(leading);
  for (const auto& num : numerators) {
    for (const auto& den : denominators) {
      Scalar q = num / den;
      for (const auto& u : units) out.insert(q * u);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<RootMultiplicity> poly_roots_exact(const Polynomial& p) {
  if (p.degree() < 1) {
    throw Error(ErrorKind::DimensionMismatch, "poly_roots_exact",
                "polynomial '" + format_polynomial(p) + "' has degree < 1");
  }
  Polynomial rest = p.monic();
  std::map<Scalar, std::size_t> roots;
  auto deflate = [&](const Scalar& r) {
    while (rest.degree() >= 1 && rest(r).is_zero()) {
      rest = divmod(rest, Polynomial::linear_factor(r)).first;
      ++roots[r];
    }
  };

  deflate(Scalar(0));
  if (rest.degree() >= 1 && rest.has_real_coefficients()) {
    for (const auto& c : rational_root_candidates(rest)) deflate(c);
  }
  if (rest.degree() >= 3) {
    for (const auto& c : gaussian_root_candidates(rest)) deflate(c);
  }
  if (rest.degree() == 2) {
    const Scalar& b = rest.coefficient(1);
    const Scalar& c = rest.coefficient(0);
    auto root = gaussian_sqrt(b * b - Scalar(4) * c);
    if (!root) throw SpectrumNotRepresentable("poly_roots_exact", rest);
    Scalar half = Scalar(Rational(1, 2));
    Scalar r1 = (-b - *root) * half;
    Scalar r2 = (-b + *root) * half;
    ++roots[r1];
    ++roots[r2];
    rest = Polynomial::constant(1);
  } else if (rest.degree() == 1) {
    ++roots[-rest.coefficient(0)];
    rest = Polynomial::constant(1);
  }
  if (rest.degree() >= 1) throw SpectrumNotRepresentable("poly_roots_exact", rest);

  std::vector<RootMultiplicity> out;
  for (auto& [r, m] : roots) out.push_back({r, m});
  return out;
}

Polynomial minimal_polynomial(const Matrix& a) {
  if (!a.is_square() || a.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "minimal_polynomial",
                "expected a non-empty square matrix");
  }
  const std::size_t n = a.rows();
  Polynomial result = Polynomial::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    // e_k is already annihilated when the running lcm kills it.
    if (evaluate(result, a).col(k).is_zero()) continue;
    result = lcm(result, krylov_annihilator(a, Matrix::unit(n, k)));
  }
  return result;
}

std::vector<StageLadder> spectral_ladders(const Matrix& a, const ProvidedEigenvalues& provided) {
  if (!a.is_square() || a.rows() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "spectrum", "expected a non-empty square matrix");
  }
  const std::size_t n = a.rows();
  std::vector<StageLadder> ladders;
  if (!provided) {
    for (const auto& [lambda, m] : poly_roots_exact(minimal_polynomial(a))) {
      if (rank(shifted(a, lambda)) == n) {
        throw Error(ErrorKind::InternalInvariantViolation, "spectrum",
                    "root " + format_scalar(lambda) + " of the minimal polynomial is not an eigenvalue");
      }
      ladders.push_back(stage_ladder(a, lambda));
    }
  } else {
    std::vector<Scalar> lambdas = *provided;
    std::sort(lambdas.begin(), lambdas.end());
    if (auto dup = std::adjacent_find(lambdas.begin(), lambdas.end()); dup != lambdas.end()) {
      throw Error(ErrorKind::InvalidProvidedEigenvalue, "spectrum",
                  "eigenvalue " + format_scalar(*dup) + " provided more than once");
    }
    for (const auto& lambda : lambdas) {
      if (std::size_t r = rank(shifted(a, lambda)); r == n) {
        throw Error(ErrorKind::InvalidProvidedEigenvalue, "spectrum",
                    format_scalar(lambda) + " is not an eigenvalue (A - " + format_scalar(lambda) +
                        "I has full rank " + std::to_string(r) + ")");
      }
      ladders.push_back(stage_ladder(a, lambda));
    }
  }
  std::size_t total = 0;
  for (const auto& l : ladders) total += l.multiplicity();
  if (total != n) {
    if (provided) {
      throw Error(ErrorKind::IncompleteSpectrum, "spectrum",
                  "multiplicities sum to " + std::to_string(total) + " < n = " + std::to_string(n));
    }
    throw Error(ErrorKind::InternalInvariantViolation, "spectrum",
                "multiplicities sum to " + std::to_string(total) + ", expected " + std::to_string(n));
  }
  return ladders;
}

Spectrum spectrum(const Matrix& a, const ProvidedEigenvalues& provided) {
  Spectrum out;
  for (const auto& l : spectral_ladders(a, provided)) {
    out.entries.push_back({l.lambda, l.multiplicity(), l.geometric_dim(), l.max_stage()});
  }
  return out;
}

Scalar find_eigenvalue(const Matrix& a) { return spectrum(a).entries.front().lambda; }

}  // namespace ejnf
