#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "bethe/suite.hpp"

using namespace bethe;

namespace {

std::string tmp_path(const std::string& leaf) {
  auto dir = std::filesystem::temp_directory_path() / "bethe_suite_test";
  std::filesystem::create_directories(dir);
  return (dir / leaf).string();
}

}  // namespace

TEST(RunConfig, Validate) {
  RunConfig c;
  EXPECT_THROW(c.validate(), ConfigError);  // no suite
  c.suites = {"core"};
  EXPECT_NO_THROW(c.validate());
  c.suites = {"nope"};
  EXPECT_THROW(c.validate(), ConfigError);
  c.suites = {"all"};
  c.precision = 32;
  EXPECT_THROW(c.validate(), ConfigError);
  c.precision = 128;
  c.n = 9;
  EXPECT_THROW(c.validate(), ConfigError);
  c.n = 3;
  c.kd = {{0, 0}};
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(RunConfig, MergeJson) {
  RunConfig c;
  c.merge_json(Json::parse(R"({"precision": 256, "seed": "18446744073709551615", "suite": "spectral", "kd": [[1, 1]]})"));
  EXPECT_EQ(c.precision, 256u);
  EXPECT_EQ(c.seed, 18446744073709551615ULL);
  EXPECT_EQ(c.suites, std::vector<std::string>{"spectral"});
  EXPECT_EQ(c.kd, (std::vector<std::pair<int, int>>{{1, 1}}));
  EXPECT_THROW(c.merge_json(Json::parse(R"({"precsion": 1})")), ConfigError);
  EXPECT_THROW(c.merge_json(Json::parse(R"({"n": "four"})")), ConfigError);
  EXPECT_THROW(c.merge_json(Json::parse("[1]")), ConfigError);
}

TEST(RunConfig, CertificateOmitsJobs) {
  RunConfig c;
  c.jobs = 7;
  EXPECT_FALSE(c.to_json().contains("jobs"));
}

TEST(Golden, IdenticalDifferingMissing) {
  const std::string path = tmp_path("k0_d1.json");
  std::filesystem::remove(path);
  Json g = elimination_golden(0, 1);
  auto missing = golden_compare(path, g, false);
  ASSERT_FALSE(missing.ok());
  EXPECT_EQ(missing.checks[0].detail, "missing golden file");

  EXPECT_TRUE(golden_compare(path, g, true).ok());
  EXPECT_TRUE(golden_compare(path, g, false).ok());

  Json h = g;
  h["psi"][0][1] = "7";
  auto diff = golden_compare(path, h, false);
  ASSERT_FALSE(diff.ok());
  EXPECT_NE(diff.checks[0].detail.find("/psi/0/1"), std::string::npos) << diff.checks[0].detail;
}

TEST(Golden, BlessCreatesDirectories) {
  auto dir = std::filesystem::path(tmp_path("fresh")) / "elimination";
  std::filesystem::remove_all(dir.parent_path());
  EXPECT_TRUE(golden_compare((dir / golden_name(1, 1)).string(), elimination_golden(1, 1), true).ok());
  EXPECT_TRUE(std::filesystem::exists(dir / "k1_d1.json"));
}

TEST(Golden, EliminationGoldenIsDeterministic) {
  EXPECT_EQ(canonical_dump(elimination_golden(2, 1)), canonical_dump(elimination_golden(2, 1)));
  EXPECT_EQ(golden_name(2, 1), "k2_d1.json");
}

TEST(Suite, DeterministicAcrossWorkerCounts) {
  RunConfig c;
  c.suites = {"core", "elimination"};
  c.n = 3;
  c.jobs = 1;
  const std::string a = run_suite(c).dump();
  c.jobs = 4;
  EXPECT_EQ(a, run_suite(c).dump());
}

TEST(Suite, TimingsOnlyWhenAsked) {
  RunConfig c;
  c.suites = {"core"};
  c.n = 1;
  EXPECT_EQ(run_suite(c).dump().find("runtime_s"), std::string::npos);
  c.timings = true;
  EXPECT_NE(run_suite(c).dump().find("runtime_s"), std::string::npos);
}

TEST(Suite, GenericPairIsRealRooted) {
  Rng rng(derive_seed(1, 3, 4, 1, 0));
  UniPoly<Rational> F0, G0;
  int draws = 0;
  ASSERT_TRUE(generic_pair(4, 1, rng, 10000, F0, G0, draws));
  EXPECT_EQ(F0.degree(), 1);
  EXPECT_EQ(G0.degree(), 4);
  EXPECT_GE(draws, 1);
}

TEST(Suite, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 3, 4, 0, 0), derive_seed(1, 3, 4, 0, 1));
  EXPECT_NE(derive_seed(1, 3, 4, 0, 0), derive_seed(2, 3, 4, 0, 0));
  EXPECT_EQ(derive_seed(5, 1, 2, 0, 3), derive_seed(5, 1, 2, 0, 3));
}
