#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wedgegroup/cli.hpp"

using namespace wg;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  Json doc;
};

CliRun run(std::vector<std::string> args, const std::string& input = "")
{
  args.insert(args.begin(), "wedgegroup");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && r.out.front() == '{') r.doc = Json::parse(r.out);
  return r;
}

const char* kIdentity = "[1,0,0,0,0,1,0,0,0,0,1,0,0,0,0,1]";

}  // namespace

TEST(Cli, PolarOfIdentity)
{
  const CliRun r = run({"polar"}, kIdentity);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["status"], "ok");
  EXPECT_EQ(r.doc["payload"]["angle"], 0.0);
  EXPECT_EQ(r.doc["payload"]["rapidity"], 0.0);
}

TEST(Cli, PolarOfBoost)
{
  const double c = std::cosh(1.0);
  const double s = std::sinh(1.0);
  std::ostringstream m;
  m.precision(17);
  m << "[[" << c << "," << s << ",0,0],[" << s << "," << c << ",0,0],[0,0,1,0],[0,0,0,1]]";
  const CliRun r = run({"polar"}, m.str());
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(r.doc["payload"]["rapidity"].get<double>(), 1.0, 1e-12);
  const Json dir = r.doc["payload"]["boost_dir"];
  EXPECT_NEAR(dir[0].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(dir[1].get<double>(), 0.0, 1e-12);
  EXPECT_NEAR(dir[2].get<double>(), 0.0, 1e-12);
}

TEST(Cli, MalformedJsonIsAUsageError)
{
  const CliRun r = run({"polar"}, "{not json");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.doc["status"], "error");
  EXPECT_FALSE(r.doc["diagnostics"].empty());
}

TEST(Cli, UnknownSubcommandIsAUsageError)
{
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"suite", "--level", "medium"}).code, 2);
}

TEST(Cli, FactorIdentity)
{
  const CliRun r = run({"factor"}, kIdentity);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["payload"]["lambda1"], r.doc["payload"]["lambda2"]);
  EXPECT_EQ(r.doc["payload"]["residual"], 0.0);
  EXPECT_EQ(r.doc["payload"]["lambda1"], Json::parse("[-1,0,0,0,0,-1,0,0,0,0,1,0,0,0,0,1]"));
}

TEST(Cli, FactorRandomIsRemultipliedExactly)
{
  const CliRun r = run({"factor", "--random", "--seed", "7"});
  ASSERT_EQ(r.code, 0);
  Mat4 l1;
  Mat4 l2;
  Mat4 lambda;
  for (int k = 0; k < 16; ++k) {
    l1(k / 4, k % 4) = r.doc["payload"]["lambda1"][k].get<double>();
    l2(k / 4, k % 4) = r.doc["payload"]["lambda2"][k].get<double>();
    lambda(k / 4, k % 4) = r.doc["payload"]["lambda"][k].get<double>();
  }
  EXPECT_LE((l1 * l2 - lambda).norm(), 1e-9);
}

TEST(Cli, FactorRejectsAntichronous)
{
  const CliRun r = run({"factor"}, "[-1,0,0,0,0,-1,0,0,0,0,1,0,0,0,0,1]");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc["status"], "fail");
  EXPECT_NE(r.doc["diagnostics"][0].get<std::string>().find("NotOrthochronous"), std::string::npos);
}

TEST(Cli, ReconstructTautological)
{
  const CliRun r = run({"reconstruct", "--samples", "200"}, R"({"kind":"tautological"})");
  ASSERT_EQ(r.code, 0);
  EXPECT_LE(r.doc["payload"]["homomorphism"]["max_residual"].get<double>(), 1e-10);
}

TEST(Cli, ReconstructSpinorialFailsAtAxioms)
{
  const CliRun r = run({"reconstruct", "--samples", "50"}, R"({"kind":"spinorial-negative"})");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc["payload"]["stage"], "axioms");
  EXPECT_TRUE(r.doc["payload"]["homomorphism"].is_null());
}

TEST(Cli, ReconstructWithoutSamplesIsVacuous)
{
  const CliRun r = run({"reconstruct", "--samples", "0"}, R"({"kind":"tautological"})");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.doc["diagnostics"][0].get<std::string>().find("warning"), std::string::npos);
}

TEST(Cli, ReconstructBadSpecExitsTwo)
{
  EXPECT_EQ(run({"reconstruct"}, R"({"kind":"conjugated","G":[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]})").code, 2);
  EXPECT_EQ(run({"reconstruct"}, R"({"kind":"nope"})").code, 2);
}

TEST(Cli, ModularEntangledQubits)
{
  // M_2 (x) 1 on C^2 (x) C^2 and a non-maximally entangled vector
  const std::string input = R"({"d":4,
    "generators":[[[0,0,1,0],[0,0,0,1],[0,0,0,0],[0,0,0,0]],[[1,0,0,0],[0,1,0,0],[0,0,0,0],[0,0,0,0]]],
    "vector":[0.6,0,0,0.8]})";
  const CliRun r = run({"modular"}, input);
  ASSERT_EQ(r.code, 0) << r.out;
  for (const auto& [name, value] : r.doc["payload"]["residuals"].items()) {
    EXPECT_LE(value.get<double>(), 1e-10) << name;
  }
  EXPECT_NEAR(r.doc["payload"]["Delta"][0][0][0].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(r.doc["payload"]["Delta"][1][1][0].get<double>(), 0.36 / 0.64, 1e-12);
}

TEST(Cli, ModularRejectsNonSeparatingAndOversized)
{
  const std::string product = R"({"d":4,
    "generators":[[[0,0,1,0],[0,0,0,1],[0,0,0,0],[0,0,0,0]]],
    "vector":[1,0,0,0]})";
  const CliRun r = run({"modular"}, product);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("NotSeparating"), std::string::npos);

  const CliRun big = run({"modular"}, R"({"d":17,"generators":[],"vector":[]})");
  EXPECT_EQ(big.code, 1);
  EXPECT_NE(big.out.find("DimensionCap"), std::string::npos);
}

TEST(Cli, FileInput)
{
  const std::string path = ::testing::TempDir() + "wedgegroup_cli_identity.json";
  std::ofstream(path) << kIdentity;
  EXPECT_EQ(run({"polar", "--file", path}).code, 0);
  EXPECT_EQ(run({"polar", "--file", path + ".missing"}).code, 2);
}

TEST(Cli, ToleranceFromEnvironmentAndFlag)
{
  // slightly off-shell input: rejected at the default, accepted at 1e-6
  const std::string input = "[1,0,0,0,0,1,0,0,0,0,1,0,0,0,0,1.0000001]";
  EXPECT_EQ(run({"polar"}, input).code, 1);
  ::setenv("WEDGEGROUP_TOL", "1e-6", 1);
  EXPECT_EQ(run({"polar"}, input).code, 0);
  EXPECT_EQ(run({"polar", "--tol", "1e-12"}, input).code, 1);
  ::setenv("WEDGEGROUP_TOL", "garbage", 1);
  EXPECT_EQ(run({"polar"}, input).code, 2);
  ::unsetenv("WEDGEGROUP_TOL");
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns)
{
  const CliRun a = run({"reconstruct", "--samples", "50", "--seed", "9"}, R"({"kind":"tautological"})");
  const CliRun b = run({"reconstruct", "--samples", "50", "--seed", "9"}, R"({"kind":"tautological"})");
  EXPECT_EQ(a.out, b.out);
  const CliRun c = run({"factor", "--random", "--seed", "3"});
  const CliRun d = run({"factor", "--random", "--seed", "3"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, QuickSuitePassesAndForcedFailureIsNamed)
{
  const CliRun quick = run({"suite", "--level", "quick"});
  EXPECT_EQ(quick.code, 0) << quick.out;
  EXPECT_NE(quick.err.find("criterion 1"), std::string::npos);
  EXPECT_EQ(quick.out.find("seconds"), std::string::npos);

  const CliRun parallel = run({"suite", "--level", "quick", "--parallel", "2"});
  EXPECT_EQ(parallel.out, quick.out);

  const CliRun forced = run({"suite", "--level", "quick", "--force-fail"});
  EXPECT_EQ(forced.code, 1);
  EXPECT_NE(forced.out.find("forced-failure"), std::string::npos);
}
