#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "resint/harness.hpp"

namespace resint::harness {
namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("resint-harness-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

TEST(Harness, ParseChecks) {
  EXPECT_EQ(parse_checks("all"), all_checks());
  EXPECT_EQ(parse_checks("sagbi,dims"), (std::vector<std::string>{"sagbi", "dims"}));
  EXPECT_THROW(parse_checks("radical,bogus"), std::invalid_argument);
  EXPECT_THROW(parse_checks(""), std::invalid_argument);
}

TEST(Harness, ValidateRejectsBadConfigs) {
  RunConfig c;
  c.m = 2;
  c.n = 3;
  EXPECT_THROW(c.validate(), BadShape);
  c = {};
  c.jobs = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.degree_bound = -1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Harness, GenerateWritesManifest) {
  RunConfig c;
  c.m = 3;
  c.n = 2;
  c.output_dir = scratch("gen");
  auto files = cmd_generate(c);
  for (const char* name : {"generators.poly", "labels.txt", "hsop.poly", "hasse.dot", "dset.txt", "manifest.json"})
    EXPECT_TRUE(std::filesystem::exists(c.output_dir / name)) << name;
  std::ifstream in(c.output_dir / "manifest.json");
  auto manifest = Json::parse(in);
  EXPECT_EQ(manifest.dump().find("hsop.poly") != std::string::npos, true);
  EXPECT_EQ(files.front().sha256.size(), 64u);
  // Regenerating yields identical digests.
  auto again = cmd_generate(c);
  ASSERT_EQ(files.size(), again.size());
  for (std::size_t i = 0; i < files.size(); ++i) EXPECT_EQ(files[i].sha256, again[i].sha256);
  std::filesystem::remove_all(c.output_dir);
}

TEST(Harness, ReportIsIndependentOfWorkerCount) {
  RunConfig c;
  c.m = 3;
  c.n = 2;
  auto one = run_checks(c, all_checks());
  c.jobs = 4;
  auto four = run_checks(c, all_checks());
  EXPECT_EQ(one.exit_code, kOk);
  EXPECT_EQ(one.text(), four.text());
  for (const auto& r : one.checks) EXPECT_EQ(r.status, "pass") << r.name;
}

TEST(Harness, BudgetExhaustionIsReported) {
  RunConfig c;
  c.m = 4;
  c.n = 2;
  c.budget.max_pairs = 1;
  auto rep = run_checks(c, {"radical"});
  EXPECT_EQ(rep.checks[0].status, "budget-exceeded");
  EXPECT_EQ(rep.exit_code, kBudget);
}

TEST(Harness, TableRows) {
  const auto text = cmd_table(6);
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  int m, n, naive, sum, diff, rows = 0;
  bool saw42 = false, saw62 = false;
  while (in >> m >> n >> naive >> sum >> diff) {
    ++rows;
    EXPECT_EQ(diff, m - n);
    saw42 |= m == 4 && n == 2 && naive == 9 && sum == 7;
    saw62 |= m == 6 && n == 2 && naive == 15 && sum == 11;
  }
  EXPECT_EQ(rows, 2 + 3 + 4 + 5 + 6);
  EXPECT_TRUE(saw42);
  EXPECT_TRUE(saw62);
  EXPECT_THROW(cmd_table(13), BadShape);
}

}  // namespace
}  // namespace resint::harness
