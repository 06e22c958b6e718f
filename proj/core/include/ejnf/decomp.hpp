#pragma once

#include <string_view>
#include <vector>

#include "ejnf/ladder.hpp"
#include "ejnf/matrix.hpp"
#include "ejnf/spectral.hpp"

namespace ejnf {

enum class DecompositionKind { Schur, BlockDiag, BlockTri, Jordan };

std::string_view to_string(DecompositionKind kind);
std::optional<DecompositionKind> parse_kind(std::string_view text);

struct Block {
  Scalar lambda;
  std::size_t size = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

/// A = V·M·V⁻¹ with the diagonal blocks of M listed in layout order.
/// For Schur decompositions every diagonal entry is its own 1×1 block.
struct Decomposition {
  DecompositionKind kind = DecompositionKind::Jordan;
  Matrix V;
  Matrix M;
  std::vector<Block> blocks;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// v₁, …, v_ℓ with (A−λI)v₁ = 0 and (A−λI)v_k = v_{k−1}.
struct JordanChain {
  Scalar lambda;
  std::vector<Matrix> vectors;

  std::size_t length() const noexcept { return vectors.size(); }
};

/// Recursive triangularization: split off one eigenvector, complete it to a
/// basis, and recurse on the trailing (n−1)×(n−1) block.
Decomposition trigonalize(const Matrix& a, const ProvidedEigenvalues& provided = std::nullopt);

/// Similarity onto the generalized eigenspaces, one diagonal block each.
Decomposition block_diagonalize(const Matrix& a, const ProvidedEigenvalues& provided = std::nullopt);

/// block_diagonalize followed by trigonalize on every diagonal block.
Decomposition blockwise_trigonalize(const Matrix& a,
                                    const ProvidedEigenvalues& provided = std::nullopt);

/// Chains covering the generalized eigenspace of ladder.lambda, longest first.
///
/// Seeds are picked top-down: at stage ℓ the canonical basis of 𝒩^ℓ is
/// scanned in order and a vector is accepted when it is independent of
/// 𝒩^{ℓ−1} together with the stage-ℓ vectors already used by longer chains.
std::vector<JordanChain> jordan_chains(const Matrix& a, const StageLadder& ladder);

/// A = V·J·V⁻¹. Eigenvalues in canonical order, blocks within one eigenvalue
/// by decreasing size, chain columns in ascending stage.
Decomposition jordan_decomposition(const Matrix& a,
                                   const ProvidedEigenvalues& provided = std::nullopt);

struct JordanShape {
  bool is_jordan = false;
  std::vector<Block> blocks;
};

/// Zero except the diagonal and a {0,1} superdiagonal, where a 1 only joins
/// equal diagonal entries.
JordanShape is_jordan_matrix(const Matrix& m);

/// Jordan matrix assembled from (λ, size) blocks in the given order.
Matrix jordan_matrix(std::span<const Block> blocks);

}  // namespace ejnf
