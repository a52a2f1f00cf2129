#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mixcay_cli/cli.hpp"
#include "mixcay_cli/io.hpp"
#include "test_support.hpp"

namespace mixcay::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

const std::string kFixtures = MIXCAY_FIXTURE_DIR;

TEST(Cli, Group) {
  const auto r = run_cli({"group", "--group", "alternating:4"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["order"], 12);
  EXPECT_EQ(j["exponent"], 6);
  EXPECT_EQ(j["ambivalent"], false);
  EXPECT_EQ(j["classes"].size(), 4u);
  const auto text = run_cli({"group", "--group", "symmetric:3", "--format", "text"});
  EXPECT_NE(text.out.find("ambivalent"), std::string::npos);
}

TEST(Cli, CharacterTableCsvRoundTrip) {
  const auto r = run_cli({"chartable", "--group", "alternating:4"});
  ASSERT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "character,(),(1 2 3),(1 3 2),(0 1)(2 3)");
  EXPECT_NE(r.out.find("chi4,3.000000+0.000000i,0.000000+0.000000i,0.000000+0.000000i,-1.000000+0.000000i"),
            std::string::npos);
  const auto path = std::filesystem::temp_directory_path() / "mixcay_cli_table.csv";
  {
    std::ofstream f(path);
    f << r.out;
  }
  const CharacterTable t = read_character_table_csv(path.string());
  ASSERT_EQ(t.size(), 4u);
  EXPECT_NEAR(t.value(1, 1).imag(), std::sqrt(3.0) / 2, 1e-6);
  std::filesystem::remove(path);
  const auto j = json_of(run_cli({"chartable", "--group", "cyclic:3", "--format", "json"}));
  EXPECT_LT(j["orthogonality"]["rows"].get<double>(), 1e-8);
}

TEST(Cli, Atoms) {
  const auto r = run_cli({"atoms", "--group", "cyclic:12"});
  ASSERT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("atom {1, 5, 7, 11}"), std::string::npos);
  EXPECT_NE(r.out.find("gamma3-class {5, 11}"), std::string::npos);
  EXPECT_NE(r.out.find("gamma3-class {1, 7}"), std::string::npos);
}

TEST(Cli, SpectrumMethods) {
  const auto chars = run_cli({"spectrum", "--group", "alternating:4", "--set", "Cl[(1 3 2)]", "--method", "both"});
  ASSERT_EQ(chars.code, kSuccess) << chars.err;
  const auto j = json_of(chars);
  EXPECT_EQ(j["checks"]["moments"], true);
  EXPECT_EQ(j["checks"]["agreement"], true);
  EXPECT_EQ(j["entries"].size(), 4u);
  EXPECT_EQ(j["entries"][0]["character_index"], 1);

  const auto text = run_cli({"spectrum", "--group", "alternating:4", "--set", "Cl[(1 3 2)];Cl[(0 1)(2 3)]", "--format",
                             "text"});
  EXPECT_EQ(text.out, "{-5^1, -1^9, 7^2}\n");
  const auto adj = json_of(run_cli({"spectrum", "--group", "alternating:4", "--set", "Cl[(1 3 2)];Cl[(0 1)(2 3)]",
                                    "--matrix", "A"}));
  EXPECT_EQ(adj["checks"]["moments"], true);
  EXPECT_TRUE(adj["checks"]["agreement"].is_null());

  const auto direct = json_of(run_cli({"spectrum", "--group", "dihedral:4", "--set", "#1;#3", "--method", "direct"}));
  EXPECT_EQ(direct["checks"]["moments"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"group", "--group", "klein:4"}).code, kUsageError);
  EXPECT_EQ(run_cli({"group", "--group", "symmetric:9"}).code, kUsageError);
  EXPECT_EQ(run_cli({"spectrum", "--group", "alternating:4", "--set", "Cl[(1 3 2)]", "--matrix", "A", "--method",
                     "direct"})
                .code,
            kUsageError);
  EXPECT_EQ(run_cli({"spectrum", "--group", "alternating:4", "--set", "(0 1 2)"}).code, kUsageError) << "not normal";
  EXPECT_EQ(run_cli({"check", "--group", "alternating:4", "--set", "Cl[(9 9)]"}).code, kUsageError);
  EXPECT_EQ(run_cli({"check", "--group", "alternating:4", "--set", "()"}).code, kUsageError) << "identity";
  EXPECT_EQ(run_cli({"classify", "--groups", "cyclic:30", "--bound", "1000"}).code, kUsageError);
  EXPECT_EQ(run_cli({"classify"}).code, kUsageError);
  EXPECT_EQ(run_cli({"group", "--group", "cyclic:3", "--format", "yaml"}).code, kUsageError);
}

TEST(Cli, Check) {
  const auto r = run_cli({"check", "--group", "alternating:4", "--set", "Cl[(1 3 2)];Cl[(0 1)(2 3)]"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["integrality"]["structural"]["verdict"], true);
  EXPECT_EQ(j["integrality"]["spectral"]["verdict"], true);
  EXPECT_EQ(j["eisenstein"]["verdict"], true);
  EXPECT_EQ(j["blocks"]["g_agree"], true);
  EXPECT_EQ(j["ok"], true);
  const auto lone = json_of(run_cli({"check", "--group", "cyclic:12", "--set", "5"}));
  EXPECT_EQ(lone["integrality"]["structural"]["verdict"], false);
  EXPECT_EQ(lone["integrality"]["structural"]["offending"], "5");
}

TEST(Cli, ClassifyCsvAndDeterminism) {
  const auto a = run_cli({"classify", "--groups", "alternating:4;cyclic:4"});
  ASSERT_EQ(a.code, kSuccess) << a.err;
  const auto b = run_cli({"classify", "--groups", "alternating:4;cyclic:4"});
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "group,set,symmetric_part,skew_part,normal,hs_integral,eisenstein_integral,spectrum");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 7u + 7u);
  EXPECT_NE(a.out.find("alternating:4,Cl[(1 3 2)]→ + Cl[(0 1)(2 3)],Cl[(0 1)(2 3)],Cl[(1 3 2)]→,true,true,true,"
                       "\"{-5^1, -1^9, 7^2}\""),
            std::string::npos);
  const auto oriented = run_cli({"classify", "--groups", "alternating:4", "--mode", "oriented-only", "--format", "json"});
  EXPECT_EQ(json_of(oriented).size(), 2u);
  const auto upto = run_cli({"classify", "--all-upto", "6", "--format", "json"});
  ASSERT_EQ(upto.code, kSuccess);
  EXPECT_FALSE(json_of(upto).empty());
}

TEST(Cli, ConjectureExitCodes) {
  const auto ok = run_cli({"conjecture", "--groups", "alternating:4,cyclic:9"});
  ASSERT_EQ(ok.code, kSuccess) << ok.err;
  EXPECT_EQ(json_of(ok)["verdict"], true);
  const auto clean = run_cli({"conjecture", "--groups", "alternating:4", "--character-table", kFixtures + "/a4.csv"});
  EXPECT_EQ(clean.code, kSuccess) << clean.out;
  const auto planted =
      run_cli({"conjecture", "--groups", "alternating:4", "--character-table", kFixtures + "/a4_perturbed.csv"});
  EXPECT_EQ(planted.code, kViolation);
  EXPECT_FALSE(json_of(planted)["counterexamples"].empty());
  EXPECT_EQ(run_cli({"conjecture", "--groups", "alternating:4", "--character-table", kFixtures + "/missing.csv"}).code,
            kUsageError);
}

TEST(Cli, CheckWithPlantedTableIsViolation) {
  const auto r = run_cli({"check", "--group", "alternating:4", "--set", "Cl[(1 3 2)]", "--character-table",
                          kFixtures + "/a4_perturbed.csv"});
  EXPECT_EQ(r.code, kViolation);
}

TEST(Cli, DotAndOutFile) {
  const auto r = run_cli({"dot", "--group", "cyclic:3", "--set", "1"});
  ASSERT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("0 -> 1;"), std::string::npos);
  EXPECT_EQ(r.out.find("dir=none"), std::string::npos);
  const auto mixed = run_cli({"dot", "--group", "cyclic:4", "--set", "1;2"});
  EXPECT_NE(mixed.out.find("0 -> 2 [dir=none];"), std::string::npos);
  EXPECT_EQ(mixed.out.find("2 -> 0 [dir=none];"), std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "mixcay_cli_out.json";
  const auto w = run_cli({"--out", path.string(), "group", "--group", "cyclic:5"});
  EXPECT_EQ(w.code, kSuccess);
  EXPECT_TRUE(w.out.empty());
  std::ifstream f(path);
  EXPECT_EQ(nlohmann::json::parse(f)["order"], 5);
  std::filesystem::remove(path);
}

TEST(Io, ComplexParsing) {
  EXPECT_EQ(parse_complex("-0.5+0.866025i"), Complex(-0.5, 0.866025));
  EXPECT_EQ(parse_complex("2"), Complex(2, 0));
  EXPECT_EQ(parse_complex("-3i"), Complex(0, -3));
  EXPECT_EQ(parse_complex("1e-3-2e+1i"), Complex(1e-3, -20));
  EXPECT_THROW(parse_complex("abc"), Error);
  EXPECT_EQ(format_complex(Complex(-0.5, -1e-12)), "-0.500000+0.000000i");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
}

}  // namespace
}  // namespace mixcay::cli
