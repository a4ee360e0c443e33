#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "avoidable/corpus.hpp"

using namespace avoidable;

namespace {

// Isomorphism-class key: least sorted edge list over all n! relabellings.
std::vector<std::pair<int, int>> full_canonical(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool first = true;
  do {
    std::vector<std::pair<int, int>> es;
    for (EdgeId e : g.edges()) {
      auto [a, b] = g.endpoints(e);
      int x = perm[a.value], y = perm[b.value];
      es.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(es.begin(), es.end());
    if (first || es < best) best = es, first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Connected graphs on n labelled vertices, counted up to isomorphism.
std::size_t brute_force_count(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::set<std::vector<std::pair<int, int>>> classes;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    MultiGraph g;
    for (std::uint32_t i = 0; i < n; ++i) g.add_vertex(vid(i));
    std::size_t bit = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j, ++bit)
        if ((mask >> bit) & 1u) g.add_edge(vid(i), vid(j));
    if (is_connected(g)) classes.insert(full_canonical(g));
  }
  return classes.size();
}

}  // namespace

TEST(ConnectedGraphs, MatchBruteForceUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    EXPECT_EQ(connected_graphs(n).size(), brute_force_count(n)) << n;
}

TEST(ConnectedGraphs, SevenVerticesArePairwiseDistinct) {
  const auto gs = connected_graphs(7);
  EXPECT_EQ(gs.size(), 853u);
  std::set<std::vector<std::pair<int, int>>> classes;
  for (const MultiGraph& g : gs) {
    EXPECT_TRUE(is_connected(g));
    EXPECT_TRUE(g.is_simple());
    classes.insert(full_canonical(g));
  }
  EXPECT_EQ(classes.size(), gs.size());
}

TEST(ConnectedGraphs, RangeChecked) {
  EXPECT_THROW(connected_graphs(0), InputError);
  EXPECT_THROW(connected_graphs(9), InputError);
}

TEST(SmallGraphCorpus, CountsAndNames) {
  const auto corpus = small_graph_corpus(7);
  EXPECT_EQ(corpus.size(), 1u + 1 + 2 + 6 + 21 + 112 + 853);
  EXPECT_EQ(corpus.front().name, "n1-0");
  EXPECT_EQ(corpus.back().name, "n7-852");
}

TEST(RandomMultigraphs, SeededAndVaried) {
  const auto a = random_multigraph_corpus(200), b = random_multigraph_corpus(200);
  ASSERT_EQ(a.size(), 200u);
  bool loops = false, parallel = false, differs = false;
  const auto c = random_multigraph_corpus(200, 7);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(a[i].graph == b[i].graph);
    EXPECT_EQ(a[i].name, "rand-" + std::to_string(i));
    EXPECT_GE(a[i].graph.vertex_count(), 1u);
    EXPECT_LE(a[i].graph.vertex_count(), 6u);
    EXPECT_LE(a[i].graph.edge_count(), 9u);
    loops |= a[i].graph.has_loops();
    parallel |= a[i].graph.has_parallel_edges();
    differs |= !(a[i].graph == c[i].graph);
  }
  EXPECT_TRUE(loops);
  EXPECT_TRUE(parallel);
  EXPECT_TRUE(differs);
}
