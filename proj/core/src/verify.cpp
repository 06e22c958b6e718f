#include "ejnf/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "ejnf/error.hpp"

namespace ejnf {

std::size_t JordanStructure::dimension() const {
  std::size_t n = 0;
  for (const auto& e : eigenvalues) {
    for (auto len : e.chain_lengths) n += len;
  }
  return n;
}

void validate(const JordanStructure& s) {
  if (s.eigenvalues.empty()) {
    throw Error(ErrorKind::InvalidStructure, "validate", "structure has no eigenvalues");
  }
  std::set<Scalar> seen;
  for (const auto& e : s.eigenvalues) {
    if (!seen.insert(e.lambda).second) {
      throw Error(ErrorKind::InvalidStructure, "validate",
                  "eigenvalue " + format_scalar(e.lambda) + " listed twice");
    }
    if (e.chain_lengths.empty()) {
      throw Error(ErrorKind::InvalidStructure, "validate",
                  "eigenvalue " + format_scalar(e.lambda) + " has no chains");
    }
    for (auto len : e.chain_lengths) {
      if (len == 0) {
        throw Error(ErrorKind::InvalidStructure, "validate",
                    "eigenvalue " + format_scalar(e.lambda) + " has a chain of length 0");
      }
    }
  }
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

JordanStructure parse_structure(std::string_view text) {
  JordanStructure s;
  for (auto group : split(text, ';')) {
    auto colon = group.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::InvalidStructure, "parse_structure",
                  "missing ':' in '" + std::string(group) + "'");
    }
    EigenvalueChains e;
    try {
      e.lambda = parse_scalar(group.substr(0, colon));
    } catch (const Error& err) {
      throw Error(ErrorKind::InvalidStructure, "parse_structure", err.what());
    }
    for (auto len : split(group.substr(colon + 1), ',')) {
      if (len.empty() || len.size() > 6 ||
          !std::all_of(len.begin(), len.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(ErrorKind::InvalidStructure, "parse_structure",
                    "bad chain length '" + std::string(len) + "'");
      }
      e.chain_lengths.push_back(std::stoul(std::string(len)));
    }
    s.eigenvalues.push_back(std::move(e));
  }
  validate(s);
  return s;
}

std::string format_structure(const JordanStructure& s) {
  std::string out;
  for (const auto& e : s.eigenvalues) {
    if (!out.empty()) out += ';';
    out += format_scalar(e.lambda) + ':';
    for (std::size_t k = 0; k < e.chain_lengths.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(e.chain_lengths[k]);
    }
  }
  return out;
}

bool CheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const CheckResult* CheckReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

Matrix power(const Matrix& m, std::size_t k) {
  Matrix out = Matrix::identity(m.rows());
  for (std::size_t j = 0; j < k; ++j) out = out * m;
  return out;
}

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::string out = "(";
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(dims[k]);
  }
  return out + ")";
}

// dim 𝒩(A−λI)^k for k = 0..n.
std::vector<std::size_t> kernel_dims(const Matrix& a, const Scalar& lambda) {
  const std::size_t n = a.rows();
  Matrix shift = shifted(a, lambda);
  Matrix p = Matrix::identity(n);
  std::vector<std::size_t> out{0};
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * shift;
    out.push_back(nullity(p));
  }
  return out;
}

bool blocks_only(const Matrix& m, const std::vector<Block>& blocks) {
  std::vector<std::size_t> owner;
  for (std::size_t j = 0; j < blocks.size(); ++j) owner.insert(owner.end(), blocks[j].size, j);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (owner[r] != owner[c] && !m(r, c).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

CheckReport check_decomposition(const Matrix& a, const Decomposition& d) {
  CheckReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const char* names[] = {"invertible",     "similarity",   "block_sizes",
                         "kind_shape",     "block_spectrum", "trace_identity",
                         "multiplicity",   "chain_counts"};

  const std::size_t n = a.rows();
  bool shape_ok = a.is_square() && d.V.rows() == n && d.V.cols() == n && d.M.rows() == n &&
                  d.M.cols() == n;
  add("shape", shape_ok, shape_ok ? "" : "A, V and M must all be n x n");
  if (!shape_ok) {
    for (auto name : names) add(name, false, "skipped: shape mismatch");
    return report;
  }

  try {
    (void)inverse(d.V);
    add("invertible", true, "");
  } catch (const Error& e) {
    add("invertible", false, e.what());
  }

  add("similarity", a * d.V == d.V * d.M, "");

  std::size_t total = 0;
  bool nonempty = true;
  for (const auto& b : d.blocks) {
    total += b.size;
    nonempty = nonempty && b.size > 0;
  }
  bool sizes_ok = nonempty && total == n;
  add("block_sizes", sizes_ok,
      "sum of block sizes " + std::to_string(total) + ", n = " + std::to_string(n));
  if (!sizes_ok) {
    for (std::size_t k = 3; k < std::size(names); ++k) add(names[k], false, "skipped: bad blocks");
    return report;
  }

  const bool triangular_kind = d.kind != DecompositionKind::BlockDiag;
  switch (d.kind) {
    case DecompositionKind::Schur: {
      bool ok = d.M.is_upper_triangular();
      for (const auto& b : d.blocks) ok = ok && b.size == 1;
      add("kind_shape", ok, "upper triangular with 1x1 blocks");
      break;
    }
    case DecompositionKind::BlockDiag:
      add("kind_shape", blocks_only(d.M, d.blocks), "zero outside the diagonal blocks");
      break;
    case DecompositionKind::BlockTri:
      add("kind_shape", blocks_only(d.M, d.blocks) && d.M.is_upper_triangular(),
          "upper triangular and zero outside the diagonal blocks");
      break;
    case DecompositionKind::Jordan: {
      auto shape = is_jordan_matrix(d.M);
      add("kind_shape", shape.is_jordan && shape.blocks == d.blocks,
          shape.is_jordan ? "Jordan matrix" : "not a Jordan matrix");
      break;
    }
  }

  // Each diagonal block B_j satisfies (B_j − λ_j I)^size = 0; triangular kinds
  // must in addition carry λ_j on the whole block diagonal.
  bool spectrum_ok = true;
  std::string spectrum_detail;
  std::size_t offset = 0;
  for (const auto& b : d.blocks) {
    Matrix block = d.M.block(offset, offset, b.size, b.size);
    bool ok = power(shifted(block, b.lambda), b.size).is_zero();
    if (triangular_kind) {
      for (std::size_t k = 0; k < b.size; ++k) ok = ok && block(k, k) == b.lambda;
    }
    if (!ok && spectrum_ok) {
      spectrum_detail = "block at offset " + std::to_string(offset) + " is not pure " +
                        format_scalar(b.lambda);
    }
    spectrum_ok = spectrum_ok && ok;
    offset += b.size;
  }
  add("block_spectrum", spectrum_ok, spectrum_detail);

  Scalar weighted;
  for (const auto& b : d.blocks) weighted += b.lambda * Scalar(b.size);
  add("trace_identity", a.trace() == weighted && d.M.trace() == weighted,
      "trace(A) = " + format_scalar(a.trace()) + ", sum lambda*size = " + format_scalar(weighted));

  std::map<Scalar, std::size_t> by_lambda;
  std::map<Scalar, std::vector<std::size_t>> sizes_by_lambda;
  for (const auto& b : d.blocks) {
    by_lambda[b.lambda] += b.size;
    sizes_by_lambda[b.lambda].push_back(b.size);
  }
  std::map<Scalar, std::vector<std::size_t>> kdims;
  for (const auto& [lambda, m] : by_lambda) kdims[lambda] = kernel_dims(a, lambda);

  bool mult_ok = true;
  std::string mult_detail;
  std::size_t mult_total = 0;
  for (const auto& [lambda, m] : by_lambda) {
    std::size_t hau = kdims[lambda].back();
    mult_total += hau;
    if (hau != m) {
      mult_ok = false;
      mult_detail = "eigenvalue " + format_scalar(lambda) + ": blocks cover " +
                    std::to_string(m) + ", generalized eigenspace has dimension " +
                    std::to_string(hau);
    }
  }
  mult_ok = mult_ok && mult_total == n;
  add("multiplicity", mult_ok, mult_detail);

  if (d.kind != DecompositionKind::Jordan) {
    add("chain_counts", true, "n/a");
  } else {
    bool ok = true;
    std::string detail;
    for (const auto& [lambda, sizes] : sizes_by_lambda) {
      const auto& dims = kdims[lambda];
      if (sizes.size() != dims[1]) {
        ok = false;
        detail = "eigenvalue " + format_scalar(lambda) + ": " + std::to_string(sizes.size()) +
                 " blocks, eigenspace dimension " + std::to_string(dims[1]);
      }
      for (std::size_t stage = 1; stage < dims.size(); ++stage) {
        auto reaching = std::count_if(sizes.begin(), sizes.end(),
                                      [&](std::size_t s) { return s >= stage; });
        if (static_cast<std::size_t>(reaching) != dims[stage] - dims[stage - 1]) {
          ok = false;
          detail = "eigenvalue " + format_scalar(lambda) + ": stage " + std::to_string(stage) +
                   " count mismatch, kernel dims " + dims_string(dims);
        }
      }
    }
    add("chain_counts", ok, detail);
  }
  return report;
}

CheckReport check_ladder(const Matrix& a, const StageLadder& ladder) {
  CheckReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const std::size_t n = a.rows();
  const std::size_t top = ladder.max_stage();
  const auto dims = ladder.dims();
  Matrix shift = shifted(a, ladder.lambda);

  bool grows = top >= 1 && top <= n && dims.front() >= 1;
  for (std::size_t k = 1; k < dims.size(); ++k) grows = grows && dims[k - 1] < dims[k];
  add("strictly_increasing", grows, dims_string(dims));

  Matrix top_power = power(shift, top);
  Matrix next = top_power * shift;
  Matrix after = next * shift;
  std::size_t d0 = nullity(top_power), d1 = nullity(next), d2 = nullity(after);
  add("stabilized", d0 == dims.back() && d1 == d0 && d2 == d0,
      "dims at L, L+1, L+2: " + std::to_string(d0) + "," + std::to_string(d1) + "," +
          std::to_string(d2));

  bool nested = true;
  bool in_stage = true;
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k < top; ++k) {
    p = p * shift;
    Matrix pnext = p * shift;
    for (const auto& v : ladder.stage_bases[k].vectors) {
      in_stage = in_stage && (p * v).is_zero();
      nested = nested && (pnext * v).is_zero();
    }
  }
  add("stage_membership", in_stage, "");
  add("nested", nested, "");

  Matrix hau = ladder.stage_bases.back().as_matrix();
  bool invariant = true;
  for (const auto& u : ladder.stage_bases.back().vectors) {
    invariant = invariant && solve(hau, a * u).has_value();
  }
  add("invariant", invariant, "A maps the generalized eigenspace into itself");
  return report;
}

CheckReport check_chains(const Matrix& a, const StageLadder& ladder,
                         const std::vector<JordanChain>& chains) {
  CheckReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const std::size_t n = a.rows();
  Matrix shift = shifted(a, ladder.lambda);

  bool eigen = true, links = true, stages = true, sorted = true;
  std::size_t total = 0;
  std::vector<Matrix> all;
  std::vector<std::size_t> per_stage(n + 1, 0);
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const auto& v = chains[c].vectors;
    if (c > 0 && chains[c - 1].length() < chains[c].length()) sorted = false;
    if (v.empty() || chains[c].lambda != ladder.lambda) {
      eigen = false;
      continue;
    }
    eigen = eigen && !v.front().is_zero() && (shift * v.front()).is_zero();
    Matrix p = Matrix::identity(n);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k > 0) links = links && shift * v[k] == v[k - 1];
      // stage exactly k+1
      Matrix below = p * v[k];
      p = p * shift;
      stages = stages && !below.is_zero() && (p * v[k]).is_zero();
      if (k + 1 <= n) ++per_stage[k + 1];
      all.push_back(v[k]);
    }
    total += v.size();
  }
  add("eigenvector_stage", eigen, "(A - lambda I) v1 = 0, v1 != 0");
  add("chain_links", links, "(A - lambda I) v_k = v_{k-1}");
  add("exact_stage", stages, "");
  add("sorted_by_length", sorted, "");
  add("chain_count", chains.size() == ladder.geometric_dim(),
      std::to_string(chains.size()) + " chains, eigenspace dimension " +
          std::to_string(ladder.geometric_dim()));
  add("length_sum", total == ladder.multiplicity(),
      std::to_string(total) + " vectors, multiplicity " + std::to_string(ladder.multiplicity()));

  auto dims = ladder.dims();
  bool weyr = true;
  for (std::size_t stage = 1; stage <= n; ++stage) {
    std::size_t expected = stage <= dims.size()
                               ? dims[stage - 1] - (stage >= 2 ? dims[stage - 2] : 0)
                               : 0;
    weyr = weyr && per_stage[stage] == expected;
  }
  add("stage_counts", weyr, "vectors per stage = dim N^l - dim N^(l-1), dims " + dims_string(dims));
  add("independent", !all.empty() && rank(Matrix::hstack(all, n)) == all.size(), "");
  return report;
}

Conjugator random_conjugator(std::size_t n, std::uint64_t seed, std::int64_t bound) {
  if (bound < 1) {
    throw Error(ErrorKind::InvalidStructure, "generate_case",
                "entry bound " + std::to_string(bound) + " < 1");
  }
  Conjugator out{Matrix::identity(n), Matrix::identity(n)};
  if (n < 2) return out;
  std::mt19937_64 rng(seed);
  const std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
  for (std::size_t step = 0; step < 2 * n; ++step) {
    std::size_t i = rng() % n;
    std::size_t j = rng() % n;
    if (i == j) j = (i + 1) % n;
    const bool swap = rng() % 4 == 0;
    const std::int64_t k = static_cast<std::int64_t>(rng() % span) - bound;
    if (swap) {
      out.S.swap_rows(i, j);
      for (std::size_t r = 0; r < n; ++r) std::swap(out.S_inv(r, i), out.S_inv(r, j));
      continue;
    }
    // S ← (I + k·e_i e_jᵀ)·S,  S⁻¹ ← S⁻¹·(I − k·e_i e_jᵀ)
    Scalar factor(k);
    for (std::size_t c = 0; c < n; ++c) out.S(i, c) += factor * out.S(j, c);
    for (std::size_t r = 0; r < n; ++r) out.S_inv(r, j) -= factor * out.S_inv(r, i);
  }
  return out;
}

GeneratedCase generate_case(const JordanStructure& structure, std::uint64_t seed,
                            std::int64_t bound) {
  validate(structure);
  auto eigenvalues = structure.eigenvalues;
  std::sort(eigenvalues.begin(), eigenvalues.end(),
            [](const auto& x, const auto& y) { return x.lambda < y.lambda; });
  const std::size_t n = structure.dimension();
  Matrix j(n, n);
  std::size_t at = 0;
  for (auto& e : eigenvalues) {
    std::sort(e.chain_lengths.begin(), e.chain_lengths.end(), std::greater<>());
    for (auto len : e.chain_lengths) {
      for (std::size_t k = 0; k < len; ++k) {
        j(at + k, at + k) = e.lambda;
        if (k + 1 < len) j(at + k, at + k + 1) = 1;
      }
      at += len;
    }
  }
  auto [s, s_inv] = random_conjugator(n, seed, bound);
  return {s * j * s_inv, j};
}

namespace {

// Partitions of n, largest parts first, in reverse lexicographic order.
std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t first = std::min(n, max_part); first >= 1; --first) {
    for (auto& rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

}  // namespace

std::vector<JordanStructure> exhaustive_structures(std::size_t n) {
  if (n < 1 || n > 6) {
    throw Error(ErrorKind::InvalidStructure, "exhaustive_structures",
                "n = " + std::to_string(n) + " outside 1..6");
  }
  const Scalar palette[] = {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar::i()};
  std::vector<JordanStructure> out;
  // Sizes of the generalized eigenspaces: partitions of n with at most 5 parts.
  for (std::size_t k = 1; k <= std::min<std::size_t>(n, std::size(palette)); ++k) {
    for (const auto& sizes : partitions(n, n)) {
      if (sizes.size() != k) continue;
      // Chain lengths per eigenvalue; equal sizes take non-decreasing
      // partition indices so that relabelings are not repeated.
      std::vector<std::vector<std::vector<std::size_t>>> options;
      for (auto s : sizes) options.push_back(partitions(s, s));
      std::vector<std::size_t> pick(k, 0);
      std::function<void(std::size_t)> recurse = [&](std::size_t pos) {
        if (pos == k) {
          JordanStructure js;
          for (std::size_t e = 0; e < k; ++e) js.eigenvalues.push_back({palette[e], options[e][pick[e]]});
          out.push_back(std::move(js));
          return;
        }
        std::size_t start = pos > 0 && sizes[pos] == sizes[pos - 1] ? pick[pos - 1] : 0;
        for (std::size_t idx = start; idx < options[pos].size(); ++idx) {
          pick[pos] = idx;
          recurse(pos + 1);
        }
      };
      recurse(0);
    }
  }
  return out;
}

}  // namespace ejnf
