#include <gtest/gtest.h>

#include <set>

#include "starlab/error.hpp"
#include "starlab/report.hpp"
#include "starlab/suites.hpp"

using namespace starlab;

namespace {

const std::vector<CorpusMember>& corpus() {
  static const auto c = load_corpus(default_corpus(), RingOptions{});
  return c;
}

ErrorKind kind_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ValidationError;
}

}  // namespace

TEST(DefaultCorpus, Shape) {
  const auto& c = corpus();
  EXPECT_EQ(c.size(), 20u);
  std::size_t largest = 0;
  std::set<std::string> labels;
  for (const auto& m : c) {
    largest = std::max(largest, m.star.ring().size());
    labels.insert(m.entry.label);
  }
  EXPECT_EQ(largest, 256u);
  EXPECT_EQ(labels.size(), c.size());
}

TEST(SuiteTags, AllHaveStatements) {
  EXPECT_EQ(suite_tags().size(), 20u);
  for (const auto& t : suite_tags()) EXPECT_FALSE(suite_statement(t).empty()) << t;
  EXPECT_EQ(kind_of([] { run_suite(corpus(), "NOPE"); }), ErrorKind::ValidationError);
}

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, PassesOnDefaultCorpus) {
  const auto r = run_suite(corpus(), GetParam());
  ASSERT_EQ(r.members.size(), corpus().size());
  for (const auto& m : r.members)
    EXPECT_NE(m.status, Status::Violation) << m.label << ": " << m.witness << " " << m.note;
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.count(Status::Consistent), 0u);
}

INSTANTIATE_TEST_SUITE_P(Default, EverySuite, ::testing::ValuesIn(suite_tags()), [](const auto& info) {
  std::string n;
  for (char ch : info.param) n += ch == '-' ? '_' : ch;
  return n;
});

TEST(Suites, ApplicabilityCounts) {
  const auto count = [](const char* tag) {
    const auto r = run_suite(corpus(), tag);
    return std::pair(r.count(Status::Consistent), r.count(Status::NotApplicable));
  };
  EXPECT_EQ(count("MATRIX-NEG").first, 2u);
  EXPECT_EQ(count("MATRIX-NEG").second, 18u);
  EXPECT_EQ(count("GROUPRING").first, 3u);
  EXPECT_EQ(count("BOOL").first, 6u);
  EXPECT_EQ(count("ELEM-EQUIV").first, 20u);
}

TEST(Suites, ThreadCountDoesNotChangeOutput) {
  const auto tags = suite_tags();
  const auto one = report::suites_json(corpus(), run_suites(corpus(), tags, 1)).dump();
  const auto four = report::suites_json(corpus(), run_suites(corpus(), tags, 4)).dump();
  EXPECT_EQ(one, four);
}

TEST(CorpusFile, ObjectForm) {
  const auto f = parse_corpus_json(R"({"members":[{"label":"a","ring":"Z4","involution":"id"},
                                                  {"ring":"Z2xZ2","involution":"swap"}],
                                      "suites":["BOOL"]})");
  ASSERT_EQ(f.entries.size(), 2u);
  EXPECT_EQ(f.entries[0].label, "a");
  EXPECT_EQ(f.entries[1].label, "Z2xZ2 swap");
  EXPECT_EQ(f.suites, (std::vector<std::string>{"BOOL"}));
}

TEST(CorpusFile, BareArray) {
  const auto f = parse_corpus_json(R"([{"ring":"Z3","involution":"id"}])");
  ASSERT_EQ(f.entries.size(), 1u);
  EXPECT_TRUE(f.suites.empty());
}

TEST(CorpusFile, Errors) {
  EXPECT_EQ(kind_of([] { parse_corpus_json("{"); }), ErrorKind::ValidationError);
  EXPECT_EQ(kind_of([] { parse_corpus_json("[]"); }), ErrorKind::ValidationError);
  EXPECT_EQ(kind_of([] { parse_corpus_json(R"([{"ring":"Z3"}])"); }), ErrorKind::ValidationError);
  EXPECT_EQ(kind_of([] { parse_corpus_json(R"({"suites":[]})"); }), ErrorKind::ValidationError);
  EXPECT_EQ(kind_of([] { read_corpus_file("/nonexistent/corpus.json"); }), ErrorKind::IoError);
}

TEST(CorpusFile, LoadKeepsErrorKind) {
  EXPECT_EQ(kind_of([] { load_corpus({{"bad", "M2(Z2)", "id"}}, RingOptions{}); }),
            ErrorKind::IdentityOnNoncommutative);
  EXPECT_EQ(kind_of([] { load_corpus({{"big", "M3(Z3)", "tr(id)"}}, RingOptions{}); }), ErrorKind::SpecTooLarge);
}

TEST(CorpusFile, SampleFile) {
  const auto f = read_corpus_file(std::string(STARLAB_DATA_DIR) + "/corpus_small.json");
  ASSERT_EQ(f.entries.size(), 4u);
  const auto c = load_corpus(f.entries, RingOptions{});
  for (const auto& r : run_suites(c, f.suites)) EXPECT_TRUE(r.passed()) << r.suite;
}

TEST(Report, SuiteJsonShape) {
  const auto j = report::suites_json(corpus(), run_suites(corpus(), {"BOOL"}));
  EXPECT_EQ(j["result"], "PASS");
  ASSERT_EQ(j["suites"].size(), 1u);
  EXPECT_EQ(j["suites"][0]["suite"], "BOOL");
  EXPECT_EQ(j["suites"][0]["members"].size(), 20u);
  EXPECT_EQ(j["corpus"].size(), 20u);
}
