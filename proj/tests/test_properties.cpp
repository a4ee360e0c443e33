#include <gtest/gtest.h>

#include "avoidable/suite.hpp"

using namespace avoidable;

// The corpus suites at reduced scale; the acceptance runner covers the full
// 7-vertex corpus.
namespace {

std::vector<CorpusGraph> corpus() {
  auto out = small_graph_corpus(5);
  for (auto& c : random_multigraph_corpus(60)) out.push_back(std::move(c));
  return out;
}

SuiteOptions options() {
  SuiteOptions opt;
  opt.max_vertices = 5;
  opt.random_count = 60;
  return opt;
}

}  // namespace

TEST(Suites, InducedShifting) {
  const auto r = suite_induced(corpus(), options());
  EXPECT_TRUE(r.passed) << to_text(r);
}

TEST(Suites, PathShifting) {
  const auto r = suite_paths(corpus(), options());
  EXPECT_TRUE(r.passed) << to_text(r);
}

TEST(Suites, LineGraphLemma) {
  const auto r = suite_line_graph(small_graph_corpus(5), options());
  EXPECT_TRUE(r.passed) << to_text(r);
}

TEST(Suites, Walks) {
  const auto r = suite_walks(corpus(), options());
  EXPECT_TRUE(r.passed) << to_text(r);
}

TEST(Suites, FastOracleAgreement) {
  const auto r = suite_oracle(corpus(), options());
  EXPECT_TRUE(r.passed) << to_text(r);
}

TEST(Suites, Lemmas) {
  const auto r = suite_lemmas(small_graph_corpus(5), options());
  EXPECT_TRUE(r.passed) << to_text(r);
}

TEST(Suites, FamilyReportsAllPass) {
  for (const auto& r : suite_trails()) EXPECT_TRUE(r.passed) << to_text(r);
  for (const auto& r : suite_isometric()) EXPECT_TRUE(r.passed) << to_text(r);
  for (const auto& r : suite_claims()) EXPECT_TRUE(r.passed) << to_text(r);
}

TEST(Suites, FailuresCarryWitnesses) {
  // a graph with an avoidable edge makes the no-avoidable claim fail
  const auto r = verify_no_avoidable(cycle_graph(5), WalkKind::ind, 1, "C5");
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.witness.empty());
  const auto s = verify_shift_sequence(path_graph(3), ShiftSequence{WalkKind::pth, {}}, false);
  EXPECT_FALSE(s.passed);
}

// Shift classes partition the walks of each length.
TEST(ShiftClasses, Partition) {
  for (const auto& [name, g] : corpus())
    for (WalkKind t : {WalkKind::trl, WalkKind::pth, WalkKind::ind})
      for (std::size_t len = 0; len <= 2; ++len) {
        const auto all = enumerate_walks(g, t, len);
        std::map<Walk, std::size_t> owner;
        std::size_t classes = 0;
        for (const Walk& w : all) {
          if (owner.count(w)) continue;
          for (const Walk& m : shift_class(g, w, t)) {
            ASSERT_FALSE(owner.count(m)) << name;
            owner[m] = classes;
          }
          ++classes;
        }
        ASSERT_EQ(owner.size(), all.size()) << name;
      }
}

TEST(Statistics, NoBudgetErrors) {
  const auto st = shift_statistics(corpus(), options());
  EXPECT_EQ(st.budget_errors, 0u);
  EXPECT_GT(st.runs, 0u);
  EXPECT_GT(st.path_runs, 0u);
  EXPECT_GE(static_cast<double>(st.max_length), st.mean_length);
}
