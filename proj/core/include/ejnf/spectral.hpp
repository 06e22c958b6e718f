#pragma once

#include <optional>
#include <vector>

#include "ejnf/error.hpp"
#include "ejnf/ladder.hpp"
#include "ejnf/matrix.hpp"
#include "ejnf/polynomial.hpp"

namespace ejnf {

// Raised when a polynomial has roots outside ℚ(i); carries the factor that
// could not be split.
class SpectrumNotRepresentable : public Error {
 public:
  SpectrumNotRepresentable(std::string_view operation, Polynomial unresolved)
      : Error(ErrorKind::SpectrumNotRepresentable, operation,
              "roots not in Q(i); unresolved factor " + format_polynomial(unresolved)),
        unresolved_(std::move(unresolved)) {}

  const Polynomial& unresolved() const noexcept { return unresolved_; }

 private:
  Polynomial unresolved_;
};

struct RootMultiplicity {
  Scalar root;
  std::size_t multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// All roots of p in ℚ(i), sorted in canonical scalar order.
///
/// Real rational coefficients go through rational-root candidates with
/// synthetic-division deflation. Any factor of degree >= 3 left over is then
/// searched for Gaussian-integer-ratio roots p/q (p | constant term,
/// q | leading coefficient in ℤ[i]). A quadratic remainder is solved with the
/// quadratic formula over ℚ(i). Anything else throws
/// SpectrumNotRepresentable.
std::vector<RootMultiplicity> poly_roots_exact(const Polynomial& p);

/// lcm over the standard basis of the Krylov annihilators; monic, and it
/// annihilates A.
Polynomial minimal_polynomial(const Matrix& a);

struct SpectrumEntry {
  Scalar lambda;
  std::size_t multiplicity = 0;
  std::size_t geometric_dim = 0;
  std::size_t max_stage = 0;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct Spectrum {
  std::vector<SpectrumEntry> entries;
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

using ProvidedEigenvalues = std::optional<std::vector<Scalar>>;

/// One ladder per distinct eigenvalue, in canonical eigenvalue order.
///
/// Without `provided`, eigenvalues are the roots of the minimal polynomial.
/// With it, every candidate must make A − λI singular
/// (InvalidProvidedEigenvalue), no candidate may repeat, and the generalized
/// eigenspaces must fill ℂⁿ (IncompleteSpectrum).
std::vector<StageLadder> spectral_ladders(const Matrix& a,
                                          const ProvidedEigenvalues& provided = std::nullopt);

Spectrum spectrum(const Matrix& a, const ProvidedEigenvalues& provided = std::nullopt);

/// Canonically smallest eigenvalue of a.
Scalar find_eigenvalue(const Matrix& a);

}  // namespace ejnf
