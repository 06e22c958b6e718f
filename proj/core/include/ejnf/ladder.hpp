#pragma once

#include <vector>

#include "ejnf/matrix.hpp"

namespace ejnf {

/// Nested null spaces 𝒩(A−λI) ⊂ 𝒩(A−λI)² ⊂ … ⊂ 𝒩(A−λI)^L, where L is the
/// first power at which the chain stops growing. stage_bases[k-1] is the
/// canonical basis of 𝒩(A−λI)^k.
struct StageLadder {
  Scalar lambda;
  std::vector<Basis> stage_bases;

  std::size_t max_stage() const noexcept { return stage_bases.size(); }
  // dim of the generalized eigenspace.
  std::size_t multiplicity() const { return stage_bases.back().size(); }
  // dim of the eigenspace.
  std::size_t geometric_dim() const { return stage_bases.front().size(); }
  std::vector<std::size_t> dims() const;
};

/// Throws NotAnEigenvalue when A − λI is invertible.
StageLadder stage_ladder(const Matrix& a, const Scalar& lambda);

}  // namespace ejnf
