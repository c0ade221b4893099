#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(STARLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

const std::string kData = STARLAB_DATA_DIR;

}  // namespace

TEST(Cli, CheckJson) {
  const auto r = run("check --ring Z2xZ2 --inv swap --prop clean,star-clean --no-timing");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["spec"]["size"], 4);
  ASSERT_EQ(j["properties"].size(), 2u);
  EXPECT_EQ(j["properties"][0]["property"], "clean");
  EXPECT_EQ(j["properties"][0]["verdict"], true);
  EXPECT_EQ(j["properties"][1]["verdict"], false);
  EXPECT_FALSE(j["properties"][1]["witness"].empty());
  EXPECT_FALSE(j["properties"][0].contains("elapsed-ms"));
}

TEST(Cli, CheckTimingByDefault) {
  const auto j = nlohmann::json::parse(run("check --ring Z4 --inv id --prop local").out);
  EXPECT_TRUE(j["properties"][0].contains("elapsed-ms"));
}

TEST(Cli, CheckCsvAndText) {
  const auto csv = run("check --ring Z4 --inv id --prop regular --format csv");
  EXPECT_EQ(csv.status, 0);
  EXPECT_EQ(csv.out.rfind("property,verdict,witness\nregular,false,", 0), 0u) << csv.out;
  const auto text = run("check --ring Z4 --inv id --prop regular --format text");
  EXPECT_NE(text.out.find("regular"), std::string::npos);
}

TEST(Cli, ElementReport) {
  const auto r = run("element --ring Z4 --inv id --elem 2");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["unit"], false);
  EXPECT_EQ(j["nilpotent"], true);
  EXPECT_TRUE(j["strongly-star-regular"].is_null());
  EXPECT_FALSE(j["strongly-pi-star-regular"].is_null());
}

TEST(Cli, SuiteSampleCorpus) {
  const auto r = run("suite --corpus " + kData + "/corpus_small.json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"], "PASS");
  EXPECT_EQ(j["suites"].size(), 4u);
}

TEST(Cli, SuiteJobsDeterministic) {
  const auto a = run("suite --corpus default --suites BOOL,CORNER,SR-CHAIN --jobs 1");
  const auto b = run("suite --corpus default --suites BOOL,CORNER,SR-CHAIN --jobs 3");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CorpusMatrix) {
  const auto r = run("corpus-matrix --corpus default --prop psr1,isr1 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("M2(Z2)"), std::string::npos);
}

TEST(Cli, Numeric) {
  const auto r = run("numeric " + kData + "/matrix_symmetric.csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "true");
  const auto c = run("numeric " + kData + "/matrix_complex.json --inv conjugate-transpose");
  EXPECT_EQ(nlohmann::json::parse(c.out)["verdict"], "true");
}

TEST(Cli, Fixtures) {
  const auto r = run("fixture all");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.size(), 5u);
  for (const auto& f : j) EXPECT_TRUE(f["ok"].get<bool>()) << f["fixture"];
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--help").status, 0);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("check --ring 'M2(Z' --inv id").status, 2);
  EXPECT_EQ(run("check --ring 'M2(Z2)' --inv id").status, 2);
  EXPECT_EQ(run("check --ring Z4 --inv id --prop nice").status, 2);
  EXPECT_EQ(run("check --ring 'M3(Z3)' --inv 'tr(id)'").status, 3);
  EXPECT_EQ(run("check --ring 'M2(Z3)' --inv 'tr(id)' --cap 16").status, 3);
  EXPECT_EQ(run("numeric /nonexistent.csv").status, 2);
  EXPECT_EQ(run("suite --suites NOPE").status, 2);
  EXPECT_EQ(run("fixture nope").status, 2);
  EXPECT_EQ(run("check --ring Z4 --inv id --format xml").status, 2);
}

TEST(Cli, SizeCapFromEnvironment) {
  const auto r = run("check --ring Z16 --inv id --prop clean");
  EXPECT_EQ(r.status, 0);
  const std::string cmd = "STARLAB_SIZE_CAP=8 " + std::string(STARLAB_CLI_PATH) + " check --ring Z16 --inv id >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(raw), 3);
}
