#pragma once

#include <istream>
#include <string>

#include "json.hpp"

#include "ejnf/decomp.hpp"
#include "ejnf/spectral.hpp"
#include "ejnf/verify.hpp"

namespace ejnf::io {

using Json = nlohmann::ordered_json;

// {"n": 3, "entries": [["2","1","1"], ...]}. Scalars are always strings.
Json to_json(const Matrix& m);
Json to_json(const Spectrum& s);
// {"kind": ..., "V": <matrix>, "M": <matrix>, "blocks": [{"lambda": "3", "size": 3}]}
Json to_json(const Decomposition& d);
Json to_json(const CheckReport& r);

// All readers throw Error(ParseError) naming the offending field.
Matrix matrix_from_json(const Json& j);
Spectrum spectrum_from_json(const Json& j);
Decomposition decomposition_from_json(const Json& j);

/// Reads a square matrix document. Entries may also be JSON integers.
Matrix read_matrix_document(std::istream& in);

std::string pretty(const Matrix& m, std::string_view indent = "  ");
std::string pretty(const Spectrum& s);
std::string pretty(const Decomposition& d);
std::string pretty(const CheckReport& r);
// e.g. "3[3]" or "0[2,1] 1[1]": eigenvalue followed by its block sizes.
std::string block_summary(const std::vector<Block>& blocks);

}  // namespace ejnf::io
