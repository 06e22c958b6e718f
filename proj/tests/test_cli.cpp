#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "serialize.hpp"
#include "test_support.hpp"

namespace ejnf {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "ejnf");
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTriple3 = R"({"n": 3, "entries": [["2","1","1"],["-4","5","4"],["1","0","2"]]})";
const std::string kIdentity2 = R"({"n": 2, "entries": [["1","0"],["0","1"]]})";
const std::string kCube = R"({"n": 3, "entries": [["0","0","2"],["1","0","0"],["0","1","0"]]})";

TEST(Cli, JordanTripleEigenvalue) {
  auto r = run_cli({"jordan", "-", "--format", "json"}, kTriple3);
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = io::Json::parse(r.out);
  auto d = io::decomposition_from_json(j);
  EXPECT_EQ(d.V, (Matrix{{-2, -1, 1}, {0, -4, 0}, {-2, 1, 0}}));
  EXPECT_EQ(d.M, (Matrix{{3, 1, 0}, {0, 3, 1}, {0, 0, 3}}));
  EXPECT_FALSE(j.at("diagonalizable").get<bool>());

  auto pretty = run_cli({"jordan"}, kTriple3);
  EXPECT_EQ(pretty.code, 0);
  EXPECT_NE(pretty.out.find("blocks: 3[3]"), std::string::npos);
  EXPECT_NE(pretty.out.find("[ -2 -1 1 ]"), std::string::npos);
}

TEST(Cli, SpectrumIdentity) {
  auto r = run_cli({"spectrum", "--format", "json"}, kIdentity2);
  ASSERT_EQ(r.code, 0) << r.err;
  auto s = io::spectrum_from_json(io::Json::parse(r.out));
  EXPECT_EQ(s.entries, (std::vector<SpectrumEntry>{{1, 2, 2, 1}}));
}

TEST(Cli, NotRepresentableExitsTwo) {
  auto r = run_cli({"jordan"}, kCube);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("z^3 - 2"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("jordan"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, WrongProvidedEigenvalue) {
  auto r = run_cli({"jordan", "--spectrum", "1"}, kCube);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("InvalidProvidedEigenvalue"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("1 is not an eigenvalue"), std::string::npos) << r.err;
}

TEST(Cli, ProvidedSpectrumMatchesDiscovery) {
  auto a = run_cli({"jordan", "--format", "json"}, kTriple3);
  auto b = run_cli({"jordan", "--format", "json", "--spectrum", "3"}, kTriple3);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, GenPipedIntoJordanCheck) {
  auto g = run_cli({"gen", "--structure", "3:3", "--seed", "7", "--bound", "3"});
  ASSERT_EQ(g.code, 0) << g.err;
  auto r = run_cli({"jordan", "--check"}, g.out);
  EXPECT_EQ(r.code, 0) << r.err << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  auto expected = io::matrix_from_json(io::Json::parse(g.out).at("J_expected"));
  auto j = run_cli({"jordan", "--format", "json"}, g.out);
  EXPECT_EQ(io::decomposition_from_json(io::Json::parse(j.out)).M, expected);
}

TEST(Cli, JsonOutputReparses) {
  for (const char* cmd : {"schur", "blockdiag", "blocktri", "jordan"}) {
    auto r = run_cli({cmd, "--format", "json"}, kTriple3);
    ASSERT_EQ(r.code, 0) << cmd << r.err;
    auto d = io::decomposition_from_json(io::Json::parse(r.out));
    EXPECT_EQ(to_string(d.kind), std::string(cmd));
    EXPECT_EQ(io::decomposition_from_json(io::to_json(d)), d);
    EXPECT_TRUE(check_decomposition(Matrix{{2, 1, 1}, {-4, 5, 4}, {1, 0, 2}}, d).passed());
  }
}

TEST(Cli, DeterministicOutput) {
  auto a = run_cli({"jordan", "--format", "json"}, kTriple3);
  auto b = run_cli({"jordan", "--format", "json"}, kTriple3);
  EXPECT_EQ(a.out, b.out);
  auto g1 = run_cli({"gen", "--structure", "0:2,1;1:1", "--seed", "3"});
  auto g2 = run_cli({"gen", "--structure", "0:2,1;1:1", "--seed", "3"});
  EXPECT_EQ(g1.out, g2.out);
}

TEST(Cli, VerifySubcommand) {
  auto r = run_cli({"verify", "--format", "json"}, kTriple3);
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = io::Json::parse(r.out);
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("reports").size(), 4u);
  EXPECT_EQ(j.at("ladders").at(0).at("dims"), io::Json::parse("[1,2,3]"));
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"jordan", "--format", "xml"}, kTriple3).code, 1);
  EXPECT_EQ(run_cli({"gen"}).code, 1);
  EXPECT_EQ(run_cli({"gen", "--structure", "3:0"}).code, 1);
  EXPECT_EQ(run_cli({"jordan", "/nonexistent/file.json"}).code, 1);

  auto bad_entry = run_cli({"jordan"}, R"({"n": 2, "entries": [["1","x"],["0","1"]]})");
  EXPECT_EQ(bad_entry.code, 1);
  EXPECT_NE(bad_entry.err.find("entry (0,1)"), std::string::npos) << bad_entry.err;

  EXPECT_EQ(run_cli({"jordan"}, R"({"n": 2, "entries": [["1","0"]]})").code, 1);
  EXPECT_EQ(run_cli({"jordan"}, R"({"n": 1, "entries": [[1.5]]})").code, 1);
  EXPECT_EQ(run_cli({"jordan"}, "not json").code, 1);
  EXPECT_EQ(run_cli({"jordan"}, R"({"n": 1, "entries": [["1/0"]]})").code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, IntegerEntriesAccepted) {
  auto r = run_cli({"spectrum", "--format", "json"}, R"({"n": 2, "entries": [[2, 0], [0, 5]]})");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::spectrum_from_json(io::Json::parse(r.out)).entries.size(), 2u);
}

TEST(Serialize, RoundTripProperty) {
  testing::Gen gen(41);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = gen.integer(1, 4);
    Matrix m = gen.matrix(n, n, true);
    ASSERT_EQ(io::matrix_from_json(io::Json::parse(io::to_json(m).dump())), m);

    Decomposition d{DecompositionKind::BlockTri, m, gen.matrix(n, n, true), {{gen.scalar(), n}}};
    ASSERT_EQ(io::decomposition_from_json(io::Json::parse(io::to_json(d).dump())), d);

    Spectrum s{{{gen.scalar(), n, 1, 1}}};
    ASSERT_EQ(io::spectrum_from_json(io::Json::parse(io::to_json(s).dump())), s);
  }
}

}  // namespace
}  // namespace ejnf
