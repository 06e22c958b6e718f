#include "serialize.hpp"

#include <algorithm>
#include <sstream>

namespace ejnf::io {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorKind::ParseError, "read_json", what);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t count_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(std::string("field '") + name + "' must be a non-negative integer, got " + v.dump());
  }
  return v.get<std::size_t>();
}

Scalar scalar_from_json(const Json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const Error& e) {
      fail(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Scalar(v.get<long long>());
  fail(where + ": scalar must be a string in the scalar grammar, got " + v.dump());
}

}  // namespace

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m(r, c)));
    rows.push_back(std::move(row));
  }
  Json out;
  out["n"] = m.rows();
  if (!m.is_square()) out["cols"] = m.cols();
  out["entries"] = std::move(rows);
  return out;
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t n = count_field(j, "n");
  const std::size_t cols = j.contains("cols") ? count_field(j, "cols") : n;
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != n) {
    fail("'entries' must be an array of " + std::to_string(n) + " rows");
  }
  Matrix m(n, cols);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = entries[r];
    if (!row.is_array() || row.size() != cols) {
      fail("row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = scalar_from_json(row[c], "entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
    }
  }
  return m;
}

Matrix read_matrix_document(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  Matrix m = matrix_from_json(j);
  if (!m.is_square() || m.rows() == 0) fail("matrix document must be square with n >= 1");
  return m;
}

Json to_json(const Spectrum& s) {
  Json entries = Json::array();
  std::size_t n = 0;
  for (const auto& e : s.entries) {
    Json item;
    item["lambda"] = format_scalar(e.lambda);
    item["multiplicity"] = e.multiplicity;
    item["geometric_dim"] = e.geometric_dim;
    item["max_stage_L"] = e.max_stage;
    entries.push_back(std::move(item));
    n += e.multiplicity;
  }
  Json out;
  out["n"] = n;
  out["spectrum"] = std::move(entries);
  return out;
}

Spectrum spectrum_from_json(const Json& j) {
  const Json& entries = field(j, "spectrum");
  if (!entries.is_array()) fail("'spectrum' must be an array");
  Spectrum s;
  for (const auto& item : entries) {
    s.entries.push_back({scalar_from_json(field(item, "lambda"), "lambda"),
                         count_field(item, "multiplicity"), count_field(item, "geometric_dim"),
                         count_field(item, "max_stage_L")});
  }
  return s;
}

Json to_json(const Decomposition& d) {
  Json blocks = Json::array();
  for (const auto& b : d.blocks) {
    Json item;
    item["lambda"] = format_scalar(b.lambda);
    item["size"] = b.size;
    blocks.push_back(std::move(item));
  }
  Json out;
  out["kind"] = std::string(to_string(d.kind));
  out["V"] = to_json(d.V);
  out["M"] = to_json(d.M);
  out["blocks"] = std::move(blocks);
  return out;
}

Decomposition decomposition_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) fail("'kind' must be a string");
  auto parsed = parse_kind(kind.get<std::string>());
  if (!parsed) fail("unknown decomposition kind '" + kind.get<std::string>() + "'");
  Decomposition d{*parsed, matrix_from_json(field(j, "V")), matrix_from_json(field(j, "M")), {}};
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array()) fail("'blocks' must be an array");
  for (const auto& item : blocks) {
    d.blocks.push_back({scalar_from_json(field(item, "lambda"), "lambda"), count_field(item, "size")});
  }
  return d;
}

Json to_json(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  Json out;
  out["passed"] = r.passed();
  out["checks"] = std::move(checks);
  return out;
}

std::string pretty(const Matrix& m, std::string_view indent) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r * m.cols() + c] = format_scalar(m(r, c));
      width[c] = std::max(width[c], cells[r * m.cols() + c].size());
    }
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& cell = cells[r * m.cols() + c];
      os << ' ' << std::string(width[c] - cell.size(), ' ') << cell;
    }
    os << " ]\n";
  }
  return os.str();
}

std::string pretty(const Spectrum& s) {
  std::ostringstream os;
  std::size_t w = 8;
  for (const auto& e : s.entries) w = std::max(w, format_scalar(e.lambda).size() + 2);
  auto pad = [](std::string t, std::size_t width) {
    return t.size() < width ? t + std::string(width - t.size(), ' ') : t + " ";
  };
  os << pad("lambda", w) << pad("mult", 6) << pad("geo", 5) << "L\n";
  for (const auto& e : s.entries) {
    os << pad(format_scalar(e.lambda), w) << pad(std::to_string(e.multiplicity), 6)
       << pad(std::to_string(e.geometric_dim), 5) << e.max_stage << "\n";
  }
  return os.str();
}

std::string block_summary(const std::vector<Block>& blocks) {
  std::string out;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k == 0 || blocks[k].lambda != blocks[k - 1].lambda) {
      if (k > 0) out += "] ";
      out += format_scalar(blocks[k].lambda) + "[";
    } else {
      out += ",";
    }
    out += std::to_string(blocks[k].size);
  }
  if (!blocks.empty()) out += "]";
  return out;
}

std::string pretty(const Decomposition& d) {
  std::ostringstream os;
  os << "kind: " << to_string(d.kind) << "\n";
  os << "V =\n" << pretty(d.V);
  os << "M =\n" << pretty(d.M);
  os << "blocks: " << block_summary(d.blocks) << "\n";
  if (d.kind == DecompositionKind::Jordan) {
    bool diagonal = std::all_of(d.blocks.begin(), d.blocks.end(),
                                [](const Block& b) { return b.size == 1; });
    os << "diagonalizable: " << (diagonal ? "yes" : "no") << "\n";
  }
  return os.str();
}

std::string pretty(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.passed ? "  PASS " : "  FAIL ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (r.passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

}  // namespace ejnf::io
