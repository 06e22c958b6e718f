#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "serialize.hpp"

namespace ejnf::cli {

namespace {

struct Options {
  std::string path = "-";
  std::string spectrum;
  std::string format = "pretty";
  bool check = false;
  std::string structure;
  std::uint64_t seed = 0;
  std::int64_t bound = 3;
};

ProvidedEigenvalues parse_spectrum_flag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<Scalar> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_scalar(std::string_view(text).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Matrix load_matrix(const std::string& path, std::istream& in) {
  if (path == "-") return io::read_matrix_document(in);
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::ParseError, "read_matrix", "cannot open '" + path + "'");
  return io::read_matrix_document(file);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SpectrumNotRepresentable: return kNotRepresentable;
    case ErrorKind::InternalInvariantViolation: return kVerificationFailed;
    default: return kUsageError;
  }
}

Decomposition decompose(DecompositionKind kind, const Matrix& a, const ProvidedEigenvalues& p) {
  switch (kind) {
    case DecompositionKind::Schur: return trigonalize(a, p);
    case DecompositionKind::BlockDiag: return block_diagonalize(a, p);
    case DecompositionKind::BlockTri: return blockwise_trigonalize(a, p);
    case DecompositionKind::Jordan: return jordan_decomposition(a, p);
  }
  throw Error(ErrorKind::InternalInvariantViolation, "decompose", "unknown kind");
}

bool is_diagonal(const Decomposition& d) {
  for (const auto& b : d.blocks) {
    if (b.size != 1) return false;
  }
  return true;
}

int cmd_spectrum(const Options& o, std::istream& in, std::ostream& out) {
  Matrix a = load_matrix(o.path, in);
  Spectrum s = spectrum(a, parse_spectrum_flag(o.spectrum));
  if (o.format == "json") {
    out << io::to_json(s).dump(2) << "\n";
  } else {
    out << io::pretty(s);
  }
  return kSuccess;
}

int cmd_decompose(DecompositionKind kind, const Options& o, std::istream& in, std::ostream& out) {
  Matrix a = load_matrix(o.path, in);
  Decomposition d = decompose(kind, a, parse_spectrum_flag(o.spectrum));
  std::optional<CheckReport> report;
  if (o.check) report = check_decomposition(a, d);

  if (o.format == "json") {
    io::Json j = io::to_json(d);
    if (kind == DecompositionKind::Jordan) j["diagonalizable"] = is_diagonal(d);
    if (report) j["check"] = io::to_json(*report);
    out << j.dump(2) << "\n";
  } else {
    out << io::pretty(d);
    if (report) out << "checks:\n" << io::pretty(*report);
  }
  return report && !report->passed() ? kVerificationFailed : kSuccess;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  Matrix a = load_matrix(o.path, in);
  auto provided = parse_spectrum_flag(o.spectrum);
  bool all_passed = true;
  io::Json reports = io::Json::array();
  std::ostringstream text;

  for (auto kind : {DecompositionKind::Schur, DecompositionKind::BlockDiag,
                    DecompositionKind::BlockTri, DecompositionKind::Jordan}) {
    CheckReport r = check_decomposition(a, decompose(kind, a, provided));
    all_passed = all_passed && r.passed();
    io::Json item;
    item["kind"] = std::string(to_string(kind));
    item.update(io::to_json(r));
    reports.push_back(std::move(item));
    text << to_string(kind) << ":\n" << io::pretty(r);
  }
  io::Json ladders = io::Json::array();
  for (const auto& ladder : spectral_ladders(a, provided)) {
    CheckReport r = check_ladder(a, ladder);
    CheckReport chains = check_chains(a, ladder, jordan_chains(a, ladder));
    r.checks.insert(r.checks.end(), chains.checks.begin(), chains.checks.end());
    all_passed = all_passed && r.passed();
    io::Json item;
    item["lambda"] = format_scalar(ladder.lambda);
    item["dims"] = ladder.dims();
    item.update(io::to_json(r));
    ladders.push_back(std::move(item));
    text << "ladder " << format_scalar(ladder.lambda) << ":\n" << io::pretty(r);
  }

  if (o.format == "json") {
    io::Json j;
    j["n"] = a.rows();
    j["passed"] = all_passed;
    j["reports"] = std::move(reports);
    j["ladders"] = std::move(ladders);
    out << j.dump(2) << "\n";
  } else {
    out << text.str() << (all_passed ? "verify: all checks passed\n" : "verify: FAILED\n");
  }
  return all_passed ? kSuccess : kVerificationFailed;
}

int cmd_gen(const Options& o, std::ostream& out) {
  JordanStructure structure = parse_structure(o.structure);
  GeneratedCase c = generate_case(structure, o.seed, o.bound);
  if (o.format == "pretty") {
    out << "structure: " << format_structure(structure) << "\n";
    out << "A =\n" << io::pretty(c.A) << "J_expected =\n" << io::pretty(c.J_expected);
  } else {
    io::Json j = io::to_json(c.A);
    j["structure"] = format_structure(structure);
    j["seed"] = o.seed;
    j["bound"] = o.bound;
    j["J_expected"] = io::to_json(c.J_expected);
    out << j.dump(2) << "\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Schur, block and Jordan decompositions over Q(i)", "ejnf"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    std::optional<DecompositionKind> kind;
  };
  const Command commands[] = {
      {"spectrum", "eigenvalues with multiplicity, eigenspace dimension and ladder height", {}},
      {"schur", "upper triangular form A = V U V^-1", DecompositionKind::Schur},
      {"blockdiag", "block diagonal form over the generalized eigenspaces", DecompositionKind::BlockDiag},
      {"blocktri", "block diagonal form with triangular blocks", DecompositionKind::BlockTri},
      {"jordan", "Jordan decomposition A = V J V^-1", DecompositionKind::Jordan},
      {"verify", "run every decomposition and all structural checks", {}},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("path", o.path, "matrix document, '-' for stdin")->capture_default_str();
    sub->add_option("--spectrum", o.spectrum,
                    "comma-separated eigenvalues, bypasses root finding");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "pretty"}))
        ->capture_default_str();
    if (cmd.kind) sub->add_flag("--check", o.check, "append a check report; failures exit 3");
    subs.emplace_back(sub, &cmd);
  }
  CLI::App* gen = app.add_subcommand("gen", "generate A = S J S^-1 for a Jordan structure");
  gen->add_option("--structure", o.structure, "e.g. \"3:3\" or \"0:2,1;1:1\"")->required();
  gen->add_option("--seed", o.seed, "seed for the conjugator")->capture_default_str();
  gen->add_option("--bound", o.bound, "entry bound of the elementary operations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  std::string gen_format = "json";
  gen->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  std::string name = "ejnf";
  try {
    if (gen->parsed()) {
      name = "gen";
      o.format = gen_format;
      return cmd_gen(o, out);
    }
    for (const auto& [sub, cmd] : subs) {
      if (!sub->parsed()) continue;
      name = cmd->name;
      if (cmd->kind) return cmd_decompose(*cmd->kind, o, in, out);
      if (name == "spectrum") return cmd_spectrum(o, in, out);
      return cmd_verify(o, in, out);
    }
  } catch (const Error& e) {
    err << name << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << name << ": " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ejnf::cli
