#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cwb/cli.hpp"
#include "json.hpp"
#include "schema_check.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cwb::run(args, out, err);
  return {code, out.str(), err.str()};
}

json load_schema() {
  std::ifstream in(std::string(CWB_SCHEMA_DIR) + "/report.schema.json");
  return json::parse(in);
}

void expect_valid(const json& report) {
  const auto errors = schema::validate(report, load_schema());
  EXPECT_TRUE(errors.empty()) << (errors.empty() ? "" : errors.front());
}

}  // namespace

TEST(Cli, HomogeneityOfPoincareSphere) {
  const auto r = run({"check-homogeneity", "--model", "s3", "--group", "binary-icosahedral", "--seed", "42"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j["verdict"], "HomogeneousWitnessFound");
  EXPECT_EQ(j["seed"], 42);
  expect_valid(j);
}

TEST(Cli, CliffordRejectsLens512) {
  const auto r = run({"check-clifford", "--model", "s3", "--matrix-file", "lens_5_12.txt"});
  ASSERT_EQ(r.code, 1) << r.err;
  EXPECT_EQ(r.report()["verdict"], "NotConstantDisplacement");
  expect_valid(r.report());
}

TEST(Cli, CatalogVerifyEntry10) {
  const auto r = run({"catalog", "verify", "10", "--samples", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.report();
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_TRUE(j["evidence"]["checks"].contains("killing-none"));
  expect_valid(j);
}

TEST(Cli, EveryCommandProducesSchemaValidReports) {
  const std::vector<std::vector<std::string>> commands = {
      {"construct", "--group", "binary-dihedral-5"},
      {"construct", "--group", "cyclic", "--m", "7"},
      {"check-clifford", "--lens", "5", "--exponents", "1,1"},
      {"check-free", "--group", "binary-octahedral"},
      {"check-free", "--matrix-file", "lens_5_12.txt"},
      {"check-free", "--model", "su2", "--group", "center", "--samples", "50"},
      {"check-killing", "--space", "s5-hopf", "--direction", "hopf", "--samples", "100"},
      {"check-killing", "--space", "so5-so3", "--samples", "100"},
      {"check-berger", "--a", "0.5", "--b", "1"},
      {"check-homogeneity", "--model", "su2", "--group", "center", "--samples", "50"},
      {"check-homogeneity", "--model", "s5", "--lens", "7", "--exponents", "1,1,1", "--samples", "100"},
      {"catalog", "list"},
      {"catalog", "verify", "4"},
      {"probe-noncompact", "--geometry", "euclidean", "--angle", "0", "--translation", "3,4"},
      {"probe-noncompact", "--geometry", "hyperbolic", "--sl2", "2,0,0,0.5"},
  };
  for (const auto& c : commands) {
    const auto r = run(c);
    ASSERT_LE(r.code, 1) << c.front() << ": " << r.err;
    expect_valid(r.report());
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"construct", "--group", "binary-icosahedral"}).code, 0);
  EXPECT_EQ(run({"check-berger", "--a", "0.25", "--b", "0.5"}).code, 0);
  EXPECT_EQ(run({"check-free", "--lens", "6", "--exponents", "1,2"}).code, 2);
  EXPECT_EQ(run({"probe-noncompact", "--geometry", "euclidean", "--angle", "1.0"}).code, 1);
  EXPECT_EQ(run({"probe-noncompact", "--geometry", "hyperbolic", "--sl2", "1,0,0,1"}).code, 0);
  EXPECT_EQ(run({"check-killing", "--space", "su3"}).code, 0);
  EXPECT_EQ(run({"check-killing", "--space", "s2", "--direction", "isotropy"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"construct"}).code, 2);
  EXPECT_EQ(run({"construct", "--group", "binary-cubical"}).code, 2);
  EXPECT_EQ(run({"check-clifford", "--samples", "5", "--lens", "5", "--exponents", "1,1"}).code, 2);
  EXPECT_EQ(run({"check-clifford", "--tol", "0", "--lens", "5", "--exponents", "1,1"}).code, 2);
  EXPECT_EQ(run({"check-clifford", "--group", "binary-icosahedral", "--lens", "5", "--exponents", "1,1"}).code, 2);
  EXPECT_EQ(run({"check-clifford", "--model", "s5", "--group", "binary-icosahedral"}).code, 2);
  EXPECT_EQ(run({"check-clifford", "--matrix-file", "/nonexistent.txt"}).code, 2);
  EXPECT_EQ(run({"check-berger", "--a", "2"}).code, 2);
  EXPECT_EQ(run({"catalog", "verify", "99"}).code, 2);
  const auto r = run({"catalog", "verify", "1", "--catalog", "/nonexistent.tsv"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
}

TEST(Cli, MatrixFileFormats) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto real = (dir / "cwb_minus_id.txt").string();
  std::ofstream(real) << "4\n-1 0 0 0\n0 -1 0 0\n0 0 -1 0\n0 0 0 -1\n";
  const auto r = run({"check-clifford", "--matrix-file", real});
  EXPECT_EQ(r.code, 0) << r.err;
  // The complex 2x2 matrix diag(i, i) realifies to a Clifford map of angle pi/2.
  const auto cplx = (dir / "cwb_complex.txt").string();
  std::ofstream(cplx) << "2\n0,1 0,0\n0,0 0,1\n";
  const auto rc = run({"check-clifford", "--matrix-file", cplx});
  ASSERT_EQ(rc.code, 0) << rc.err;
  EXPECT_NEAR(rc.report()["evidence"]["elements"][0]["angle"].get<double>(), 1.5707963267948966, 1e-12);
  const auto bad = (dir / "cwb_bad.txt").string();
  std::ofstream(bad) << "2\n1 0\n0\n";
  EXPECT_EQ(run({"check-clifford", "--matrix-file", bad}).code, 2);
}

TEST(Cli, DeterministicEvidenceAndOutputFile) {
  const auto path = (std::filesystem::temp_directory_path() / "cwb_report.json").string();
  const std::vector<std::string> args = {"check-killing", "--space", "so5-so3", "--seed", "7", "--samples", "200",
                                         "--output", path};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 1);
  EXPECT_EQ(a.report()["evidence"].dump(), b.report()["evidence"].dump());
  std::ifstream in(path);
  const auto from_file = json::parse(in);
  EXPECT_EQ(from_file["evidence"].dump(), b.report()["evidence"].dump());
}

TEST(Cli, SeedFromEnvironment) {
  setenv("CWB_SEED", "1234", 1);
  const auto r = run({"check-berger"});
  EXPECT_EQ(r.report()["seed"], 1234);
  EXPECT_EQ(run({"check-berger", "--seed", "5"}).report()["seed"], 5);
  setenv("CWB_SEED", "abc", 1);
  EXPECT_EQ(run({"check-berger"}).code, 2);
  unsetenv("CWB_SEED");
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("check-homogeneity"), std::string::npos);
}
