#include "ejnf/decomp.hpp"

#include <algorithm>
#include <string>

#include "ejnf/error.hpp"

namespace ejnf {

std::string_view to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::Schur: return "schur";
    case DecompositionKind::BlockDiag: return "blockdiag";
    case DecompositionKind::BlockTri: return "blocktri";
    case DecompositionKind::Jordan: return "jordan";
  }
  return "unknown";
}

std::optional<DecompositionKind> parse_kind(std::string_view text) {
  for (auto kind : {DecompositionKind::Schur, DecompositionKind::BlockDiag,
                    DecompositionKind::BlockTri, DecompositionKind::Jordan}) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

std::vector<std::size_t> StageLadder::dims() const {
  std::vector<std::size_t> out;
  for (const auto& b : stage_bases) out.push_back(b.size());
  return out;
}

StageLadder stage_ladder(const Matrix& a, const Scalar& lambda) {
  if (!a.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "stage_ladder", "non-square matrix");
  }
  const std::size_t n = a.rows();
  const Matrix shift = shifted(a, lambda);
  StageLadder ladder{lambda, {nullspace_basis(shift)}};
  if (ladder.stage_bases.front().empty()) {
    throw Error(ErrorKind::NotAnEigenvalue, "stage_ladder",
                format_scalar(lambda) + " is not an eigenvalue");
  }
  Matrix power = shift;
  while (ladder.stage_bases.back().size() < n && ladder.stage_bases.size() < n) {
    power = power * shift;
    Basis next = nullspace_basis(power);
    if (next.size() == ladder.stage_bases.back().size()) break;
    ladder.stage_bases.push_back(std::move(next));
  }
  return ladder;
}

namespace {

std::vector<Scalar> eigenvalue_list(const Matrix& a, const ProvidedEigenvalues& provided) {
  std::vector<Scalar> out;
  for (const auto& entry : spectrum(a, provided).entries) out.push_back(entry.lambda);
  return out;
}

// Every eigenvalue of the trailing block is an eigenvalue of the original
// matrix, so the smallest one is found by scanning the full spectrum.
Decomposition trigonalize_block(const Matrix& b, std::span<const Scalar> lambdas) {
  const std::size_t n = b.rows();
  auto it = std::find_if(lambdas.begin(), lambdas.end(),
                         [&](const Scalar& l) { return rank(shifted(b, l)) < n; });
  if (it == lambdas.end()) {
    throw Error(ErrorKind::InternalInvariantViolation, "trigonalize",
                "no eigenvalue of the " + std::to_string(n) + "x" + std::to_string(n) +
                    " block among the spectrum");
  }
  const Scalar& lambda = *it;
  if (n == 1) return {DecompositionKind::Schur, Matrix::identity(1), b, {{lambda, 1}}};

  Basis eigvec{n, {nullspace_basis(shifted(b, lambda)).vectors.front()}};
  Matrix basis = complete_basis(eigvec);
  Matrix split = inverse(basis) * b * basis;  // (λ *; 0 B)
  Decomposition inner = trigonalize_block(split.block(1, 1, n - 1, n - 1), lambdas);

  Matrix lift = Matrix::identity(n);
  lift.set_block(1, 1, inner.V);
  Decomposition out{DecompositionKind::Schur, basis * lift, Matrix(n, n), {{lambda, 1}}};
  out.M(0, 0) = lambda;
  out.M.set_block(0, 1, split.block(0, 1, 1, n - 1) * inner.V);
  out.M.set_block(1, 1, inner.M);
  out.blocks.insert(out.blocks.end(), inner.blocks.begin(), inner.blocks.end());
  return out;
}

void expect_similar(const Matrix& a, const Decomposition& d, std::string_view op) {
  if (!(a * d.V == d.V * d.M)) {
    throw Error(ErrorKind::InternalInvariantViolation, op, "A*V != V*M");
  }
}

}  // namespace

Decomposition trigonalize(const Matrix& a, const ProvidedEigenvalues& provided) {
  auto lambdas = eigenvalue_list(a, provided);
  Decomposition out = trigonalize_block(a, lambdas);
  expect_similar(a, out, "trigonalize");
  return out;
}

Decomposition block_diagonalize(const Matrix& a, const ProvidedEigenvalues& provided) {
  const std::size_t n = a.rows();
  Decomposition out{DecompositionKind::BlockDiag, {}, {}, {}};
  std::vector<Matrix> columns;
  for (const auto& ladder : spectral_ladders(a, provided)) {
    const auto& top = ladder.stage_bases.back().vectors;
    columns.insert(columns.end(), top.begin(), top.end());
    out.blocks.push_back({ladder.lambda, top.size()});
  }
  out.V = Matrix::hstack(columns, n);
  out.M = inverse(out.V) * a * out.V;

  std::size_t offset = 0;
  for (const auto& blk : out.blocks) {
    for (std::size_t r = offset; r < offset + blk.size; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if ((c < offset || c >= offset + blk.size) && !out.M(r, c).is_zero()) {
          throw Error(ErrorKind::InternalInvariantViolation, "block_diagonalize",
                      "entry (" + std::to_string(r) + "," + std::to_string(c) +
                          ") outside the diagonal blocks is nonzero");
        }
      }
    }
    offset += blk.size;
  }
  return out;
}

Decomposition blockwise_trigonalize(const Matrix& a, const ProvidedEigenvalues& provided) {
  Decomposition diag = block_diagonalize(a, provided);
  std::vector<Matrix> transforms;
  std::vector<Matrix> triangles;
  std::size_t offset = 0;
  for (const auto& blk : diag.blocks) {
    const Scalar one[] = {blk.lambda};
    Decomposition inner =
        trigonalize_block(diag.M.block(offset, offset, blk.size, blk.size), one);
    transforms.push_back(std::move(inner.V));
    triangles.push_back(std::move(inner.M));
    offset += blk.size;
  }
  Decomposition out{DecompositionKind::BlockTri, diag.V * Matrix::block_diagonal(transforms),
                    Matrix::block_diagonal(triangles), diag.blocks};
  expect_similar(a, out, "blockwise_trigonalize");
  return out;
}

std::vector<JordanChain> jordan_chains(const Matrix& a, const StageLadder& ladder) {
  const std::size_t n = a.rows();
  const Matrix shift = shifted(a, ladder.lambda);
  const std::size_t top = ladder.max_stage();
  // Chains are grown top-down; back() is the lowest stage reached so far.
  std::vector<std::vector<Matrix>> chains;

  for (std::size_t stage = top; stage >= 1; --stage) {
    std::vector<Matrix> spanning;
    if (stage >= 2) {
      const auto& below = ladder.stage_bases[stage - 2].vectors;
      spanning.assign(below.begin(), below.end());
    }
    for (auto& chain : chains) {
      chain.push_back(shift * chain.back());
      spanning.push_back(chain.back());
    }
    std::size_t current = spanning.empty() ? 0 : rank(Matrix::hstack(spanning, n));
    for (const auto& candidate : ladder.stage_bases[stage - 1].vectors) {
      spanning.push_back(candidate);
      if (rank(Matrix::hstack(spanning, n)) == current + 1) {
        ++current;
        chains.push_back({candidate});
      } else {
        spanning.pop_back();
      }
    }
  }

  std::vector<JordanChain> out;
  std::size_t total = 0;
  for (auto& chain : chains) {
    std::reverse(chain.begin(), chain.end());
    total += chain.size();
    out.push_back({ladder.lambda, std::move(chain)});
  }
  if (out.size() != ladder.geometric_dim() || total != ladder.multiplicity()) {
    throw Error(ErrorKind::InternalInvariantViolation, "jordan_chains",
                std::to_string(out.size()) + " chains with " + std::to_string(total) +
                    " vectors for eigenvalue " + format_scalar(ladder.lambda) + ", expected " +
                    std::to_string(ladder.geometric_dim()) + " and " +
                    std::to_string(ladder.multiplicity()));
  }
  return out;
}

Matrix jordan_matrix(std::span<const Block> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size;
  Matrix j(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t k = 0; k < b.size; ++k) {
      j(offset + k, offset + k) = b.lambda;
      if (k + 1 < b.size) j(offset + k, offset + k + 1) = 1;
    }
    offset += b.size;
  }
  return j;
}

Decomposition jordan_decomposition(const Matrix& a, const ProvidedEigenvalues& provided) {
  const std::size_t n = a.rows();
  Decomposition out{DecompositionKind::Jordan, {}, {}, {}};
  std::vector<Matrix> columns;
  for (const auto& ladder : spectral_ladders(a, provided)) {
    for (auto& chain : jordan_chains(a, ladder)) {
      out.blocks.push_back({chain.lambda, chain.length()});
      for (auto& v : chain.vectors) columns.push_back(std::move(v));
    }
  }
  out.V = Matrix::hstack(columns, n);
  out.M = jordan_matrix(out.blocks);
  expect_similar(a, out, "jordan_decomposition");
  return out;
}

JordanShape is_jordan_matrix(const Matrix& m) {
  JordanShape shape;
  if (!m.is_square()) return shape;
  const std::size_t n = m.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c == r || c == r + 1 || m(r, c).is_zero()) continue;
      return shape;
    }
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Scalar& link = m(k, k + 1);
    if (link.is_zero()) continue;
    if (!link.is_one() || m(k, k) != m(k + 1, k + 1)) return shape;
  }
  shape.is_jordan = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && m(k - 1, k).is_one()) {
      ++shape.blocks.back().size;
    } else {
      shape.blocks.push_back({m(k, k), 1});
    }
  }
  return shape;
}

}  // namespace ejnf
