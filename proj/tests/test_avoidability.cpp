#include <gtest/gtest.h>

#include "avoidable/avoidability.hpp"
#include "avoidable/corpus.hpp"
#include "avoidable/families.hpp"
#include "oracle.hpp"

using namespace avoidable;
using oracle::vs;

namespace {

std::set<Walk> listed(const MultiGraph& g, const Walk& w, WalkKind t) {
  const bool symmetric = reversed(w) == w;
  std::set<Walk> out;
  for (const Extension& e : extensions(g, w, t))
    out.insert(symmetric ? std::min(e.extended, reversed(e.extended)) : e.extended);
  return out;
}

}  // namespace

TEST(Extensions, K4TrailHasThree) {
  const MultiGraph k4 = complete(4);
  const Walk abc = walk_through(k4, vs({0, 1, 2}));
  const auto ext = extensions(k4, abc, WalkKind::trl);
  ASSERT_EQ(ext.size(), 3u);
  std::size_t open = 0;
  for (const Extension& e : ext)
    if (!is_closable(k4, e.extended, WalkKind::trl)) ++open;
  EXPECT_EQ(open, 2u);
  EXPECT_FALSE(is_avoidable(k4, abc, WalkKind::trl));
}

TEST(Extensions, LoopPairVertexHasUniqueExtension) {
  const MultiGraph g = loop_pair();
  const Walk u = Walk::at(vid(0));
  const auto ext = extensions(g, u, WalkKind::trl);
  ASSERT_EQ(ext.size(), 1u);
  const Walk& w = ext.front().extended;
  EXPECT_EQ(canonical(w), canonical(Walk{{vid(1), vid(0), vid(0)}, {eid(0), eid(1)}}));
  EXPECT_FALSE(is_closable(g, w, WalkKind::trl));
  EXPECT_FALSE(is_avoidable(g, u, WalkKind::trl));
}

TEST(Extensions, C5InducedP3IsSimplicial) {
  const MultiGraph c5 = cycle_graph(5);
  const Walk p = walk_through(c5, vs({1, 2, 3}));
  EXPECT_TRUE(extensions(c5, p, WalkKind::ind).empty());
  EXPECT_TRUE(is_simplicial(c5, p, WalkKind::ind));
  EXPECT_TRUE(is_avoidable(c5, p, WalkKind::ind));
}

TEST(Extensions, SimplicialCases) {
  const MultiGraph k4 = complete(4);
  EXPECT_TRUE(is_simplicial(k4, Walk::at(vid(0)), WalkKind::ind));
  const MultiGraph k2 = path_graph(2);
  EXPECT_TRUE(is_simplicial(k2, walk_through(k2, vs({0, 1})), WalkKind::pth));
  EXPECT_FALSE(is_simplicial(k2, walk_through(k2, vs({0, 1})), WalkKind::wlk));
}

TEST(Extensions, TypeMismatchThrows) {
  const MultiGraph k4 = complete(4);
  EXPECT_THROW(extensions(k4, walk_through(k4, vs({0, 1, 2})), WalkKind::ind), InputError);
  EXPECT_THROW(is_closable(k4, walk_through(k4, vs({0, 1, 0})), WalkKind::trl), InputError);
}

TEST(Closable, Examples) {
  const MultiGraph k3 = complete(3);
  EXPECT_TRUE(is_closable(k3, walk_through(k3, vs({0, 1})), WalkKind::ind));
  EXPECT_TRUE(is_closable(k3, walk_through(k3, vs({0, 1})), WalkKind::ind, Mode::oracle));
  const MultiGraph w6 = wheel(6);
  for (const Walk& p : enumerate_walks(w6, WalkKind::iso, 2)) {
    EXPECT_FALSE(is_closable(w6, p, WalkKind::iso)) << to_string(p);
    EXPECT_FALSE(is_closable(w6, p, WalkKind::iso, Mode::oracle)) << to_string(p);
  }
}

TEST(Avoidable, Examples) {
  const MultiGraph p4 = path_graph(4);
  EXPECT_FALSE(is_avoidable(p4, walk_through(p4, vs({1, 2})), WalkKind::ind));
  EXPECT_FALSE(is_avoidable(p4, walk_through(p4, vs({1, 2})), WalkKind::ind, Mode::oracle));
  EXPECT_TRUE(is_avoidable(p4, walk_through(p4, vs({2, 3})), WalkKind::ind));
  const MultiGraph w6 = wheel(6);
  for (VertexId v : w6.vertices()) EXPECT_FALSE(is_avoidable(w6, Walk::at(v), WalkKind::iso));
}

TEST(Avoidable, EveryWalkIsWalkAvoidable) {
  for (const auto& c : random_multigraph_corpus(40))
    for (std::size_t len = 0; len <= 2; ++len)
      for (const Walk& w : enumerate_walks(c.graph, WalkKind::wlk, len))
        ASSERT_TRUE(is_avoidable(c.graph, w, WalkKind::wlk)) << c.name << " " << to_string(w);
}

TEST(Closable, OracleBudgetIsEnforced) {
  // a pendant edge never closes, so the search has to exhaust K6
  MultiGraph g = complete(6);
  g.add_vertex(vid(6));
  g.add_edge(vid(6), vid(0));
  SearchBudget tiny(3);
  const Walk w = walk_through(g, vs({6, 0}));
  EXPECT_THROW(is_closable(g, w, WalkKind::trl, Mode::oracle, tiny), BudgetExceeded);
}

// Extensions, closability and avoidability in both modes against the
// brute-force definitions.
TEST(Avoidable, MatchesBruteForce) {
  std::vector<CorpusGraph> graphs = small_graph_corpus(5);
  for (auto& c : random_multigraph_corpus(60)) graphs.push_back(c);
  graphs.push_back({"loop-pair", loop_pair()});
  graphs.push_back({"dipole3", dipole(3)});
  graphs.push_back({"K2,3", complete_bipartite(2, 3)});
  graphs.push_back({"W6", wheel(6)});
  std::size_t checked = 0;
  for (const auto& [name, g] : graphs) {
    for (WalkKind t : {WalkKind::trl, WalkKind::pth, WalkKind::ind, WalkKind::iso}) {
      const auto cycles = oracle::closable_set(oracle::closed_walks(g, t));
      for (std::size_t len = 0; len <= 3; ++len)
        for (const Walk& base : enumerate_walks(g, t, len))
          for (const Walk& w : {base, reversed(base)}) {
            const std::string at = name + " " + std::string(to_string(t)) + " " + to_string(w);
            ASSERT_EQ(listed(g, w, t), oracle::extensions(g, w, t)) << at;
            const bool want_close = oracle::closable(w, cycles);
            ASSERT_EQ(is_closable(g, w, t, Mode::fast), want_close) << at;
            ASSERT_EQ(is_closable(g, w, t, Mode::oracle), want_close) << at;
            const bool want_avoid = oracle::every_extension_closes(g, w, t, cycles);
            ASSERT_EQ(is_avoidable(g, w, t, Mode::fast), want_avoid) << at;
            ASSERT_EQ(is_avoidable(g, w, t, Mode::oracle), want_avoid) << at;
            ++checked;
          }
    }
  }
  EXPECT_GT(checked, 1000u);
}
