#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ejnf/decomp.hpp"
#include "ejnf/ladder.hpp"
#include "ejnf/matrix.hpp"

namespace ejnf {

struct EigenvalueChains {
  Scalar lambda;
  std::vector<std::size_t> chain_lengths;
  friend bool operator==(const EigenvalueChains&, const EigenvalueChains&) = default;
};

/// Target Jordan structure: per eigenvalue, the lengths of its chains.
struct JordanStructure {
  std::vector<EigenvalueChains> eigenvalues;

  std::size_t dimension() const;
  friend bool operator==(const JordanStructure&, const JordanStructure&) = default;
};

/// Throws InvalidStructure on repeated eigenvalues, zero lengths, or an
/// empty structure.
void validate(const JordanStructure& s);

// Grammar: λ:len(,len)*(;λ:len(,len)*)*, e.g. "3:3" or "0:2,1;1:1".
JordanStructure parse_structure(std::string_view text);
std::string format_structure(const JordanStructure& s);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(std::string_view name) const;
};

/// Similarity, invertibility, per-kind shape, block spectra, trace identity,
/// multiplicities and (for Jordan) chain counts. Every check is always
/// reported; checks that do not apply to the kind pass with detail "n/a".
CheckReport check_decomposition(const Matrix& a, const Decomposition& d);

/// Ladder growth, stabilization over two further powers, nesting, and
/// A-invariance of the top stage.
CheckReport check_ladder(const Matrix& a, const StageLadder& ladder);

/// Chain relations, stage of every vector, counting identities and linear
/// independence.
CheckReport check_chains(const Matrix& a, const StageLadder& ladder,
                         const std::vector<JordanChain>& chains);

struct Conjugator {
  Matrix S;
  Matrix S_inv;
};

/// Product of 2n seeded elementary row operations (row swaps and adding an
/// integer multiple in [−bound, bound] of one row to another) applied to the
/// identity. The inverse is accumulated alongside, so no elimination is used.
Conjugator random_conjugator(std::size_t n, std::uint64_t seed, std::int64_t bound);

struct GeneratedCase {
  Matrix A;
  Matrix J_expected;
};

/// A = S·J·S⁻¹ where J is assembled in canonical block order.
GeneratedCase generate_case(const JordanStructure& structure, std::uint64_t seed,
                            std::int64_t bound);

/// Every Jordan structure of size n over the eigenvalue palette
/// {0, 1, −1, 2, i}, with eigenvalues taken from the palette in order.
std::vector<JordanStructure> exhaustive_structures(std::size_t n);

}  // namespace ejnf
