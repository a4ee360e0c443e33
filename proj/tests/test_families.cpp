#include <gtest/gtest.h>

#include <map>

#include "avoidable/corpus.hpp"
#include "avoidable/families.hpp"
#include "oracle.hpp"

using namespace avoidable;
using oracle::vs;

namespace {

VertexId at(const MultiGraph& g, const std::string& label) {
  for (VertexId v : g.vertices())
    if (g.label(v) && *g.label(v) == label) return v;
  throw std::logic_error("no vertex " + label);
}

Walk through_labels(const MultiGraph& g, std::initializer_list<const char*> labels) {
  std::vector<VertexId> out;
  for (const char* l : labels) out.push_back(at(g, l));
  return walk_through(g, out);
}

// Cycles of length L whose vertices keep cyclic distances min(k, L-k),
// grown one vertex at a time from each start vertex.
std::set<Walk> isometric_cycles_by_growth(const MultiGraph& g) {
  const auto d = oracle::all_pairs(g);
  Distance diam = 0;
  for (VertexId u : g.vertices())
    for (VertexId v : g.vertices()) diam = std::max(diam, d[u.value][v.value]);
  std::set<Walk> out;
  for (std::size_t len = 3; len <= 2 * diam + 1; ++len) {
    std::function<void(Walk&)> grow = [&](Walk& w) {
      const std::size_t k = w.vertices.size();
      for (const Incidence& inc : g.incident(w.back())) {
        if (k == len) {
          if (inc.other != w.front()) continue;
          w.extend(inc.edge, inc.other);
          if (oracle::kind(g, w, WalkKind::iso, true, d)) out.insert(oracle::least_rotation(w));
          w.vertices.pop_back(), w.edges.pop_back();
          continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
          ok = d[w.vertices[i].value][inc.other.value] == std::min(k - i, len - (k - i));
        if (!ok) continue;
        w.extend(inc.edge, inc.other);
        grow(w);
        w.vertices.pop_back(), w.edges.pop_back();
      }
    };
    for (VertexId v : g.vertices()) {
      Walk w = Walk::at(v);
      grow(w);
    }
  }
  return out;
}

}  // namespace

TEST(Build, SizesAndIds) {
  EXPECT_EQ(wheel(6).vertex_count(), 7u);
  EXPECT_EQ(wheel(6).edge_count(), 12u);
  EXPECT_EQ(*wheel(6).label(vid(6)), "hub");
  const MultiGraph lp = loop_pair();
  EXPECT_EQ(lp.loops_at(vid(0)), 1u);
  EXPECT_EQ(lp.loops_at(vid(1)), 1u);
  EXPECT_EQ(lp.multiplicity(vid(0), vid(1)), 1u);
  EXPECT_EQ(dipole(5).multiplicity(vid(0), vid(1)), 5u);
  EXPECT_EQ(complete(5).edge_count(), 10u);
  EXPECT_EQ(complete_bipartite(2, 3).edge_count(), 6u);
  EXPECT_FALSE(complete_bipartite(2, 3).adjacent(vid(0), vid(1)));
  EXPECT_EQ(grid_product(3, 3).edge_count(), 12u);
}

TEST(Build, FromSpecIsDeterministic) {
  for (const FamilySpec& s : std::vector<FamilySpec>{{"loop-pair", {}},
                                                     {"dipole", {4}},
                                                     {"complete", {4}},
                                                     {"complete-bipartite", {2, 3}},
                                                     {"wheel", {6}},
                                                     {"path-graph", {5}},
                                                     {"cycle-graph", {5}},
                                                     {"grid-product", {3, 3}},
                                                     {"torus-strip", {7}}}) {
    const MultiGraph a = build(s), b = build(s);
    EXPECT_TRUE(a == b) << s.family;
    for (VertexId v : a.vertices()) {
      ASSERT_EQ(a.label(v) == nullptr, b.label(v) == nullptr);
      if (a.label(v)) EXPECT_EQ(*a.label(v), *b.label(v));
    }
  }
  EXPECT_TRUE(build({"wheel", {6}}) == wheel(6));
  EXPECT_EQ(family_names().size(), 9u);
}

TEST(Build, RejectsBadParameters) {
  EXPECT_THROW(build({"wheel", {2}}), InputError);
  EXPECT_THROW(build({"wheel", {}}), InputError);
  EXPECT_THROW(build({"dipole", {-1}}), InputError);
  EXPECT_THROW(build({"torus-strip", {6}}), InputError);
  EXPECT_THROW(build({"petersen", {}}), InputError);
}

TEST(IsoCounterexample, Sizes) {
  EXPECT_EQ(iso_counterexample(1).vertex_count(), 49u);
  EXPECT_EQ(iso_counterexample(1).edge_count(), 91u);
  EXPECT_EQ(iso_counterexample(2).vertex_count(), 81u);
  EXPECT_THROW(iso_counterexample(0), InputError);
}

TEST(Distances, TorusStripMetric) {
  const MultiGraph g = torus_strip(7);
  EXPECT_EQ(distance(g, at(g, "(1,1)"), at(g, "(3,4)")), 5u);
  EXPECT_EQ(distance(g, at(g, "(1,1)"), at(g, "(1,7)")), 1u);
}

TEST(IsometricSubgraph, GridEightCycle) {
  const MultiGraph g = grid_product(3, 3);
  const Walk outer = through_labels(
      g, {"(1,1)", "(1,2)", "(1,3)", "(2,3)", "(3,3)", "(3,2)", "(3,1)", "(2,1)", "(1,1)"});
  EXPECT_TRUE(classify_closed(g, outer, WalkKind::ind));
  EXPECT_FALSE(classify_closed(g, outer, WalkKind::iso));
  std::set<VertexId> hv(outer.vertices.begin(), outer.vertices.end());
  std::set<EdgeId> he(outer.edges.begin(), outer.edges.end());
  EXPECT_FALSE(is_isometric_subgraph(g, hv, he));
}

TEST(Automorphisms, KnownGroupOrders) {
  EXPECT_EQ(automorphisms(cycle_graph(5)).size(), 10u);
  EXPECT_EQ(automorphisms(complete(4)).size(), 24u);
  EXPECT_EQ(automorphisms(wheel(6)).size(), 12u);
  EXPECT_EQ(automorphisms(grid_product(3, 3)).size(), 8u);
  EXPECT_EQ(automorphisms(loop_pair()).size(), 2u);
}

TEST(Automorphisms, OrbitCounts) {
  EXPECT_EQ(count_up_to_symmetry(dipole(3), enumerate_walks(dipole(3), WalkKind::trl, 1)), 1u);
  EXPECT_EQ(count_up_to_symmetry(complete(4), enumerate_walks(complete(4), WalkKind::trl, 2)), 1u);
  // in P4 the end edges form one orbit and the middle edge another
  EXPECT_EQ(count_up_to_symmetry(path_graph(4), enumerate_walks(path_graph(4), WalkKind::pth, 1)),
            2u);
}

TEST(VerifyNoAvoidable, TrailFamilies) {
  EXPECT_TRUE(verify_no_avoidable(loop_pair(), WalkKind::trl, 0, "loop-pair").passed);
  for (std::size_t len : {1u, 3u, 5u})
    EXPECT_TRUE(verify_no_avoidable(dipole(len + 2), WalkKind::trl, len, "dipole").passed) << len;
  EXPECT_TRUE(verify_no_avoidable(complete(4), WalkKind::trl, 2, "K4").passed);
  EXPECT_TRUE(verify_no_avoidable(complete_bipartite(2, 3), WalkKind::trl, 3, "K2,3").passed);
}

TEST(VerifyNoAvoidable, IsometricFamilies) {
  EXPECT_TRUE(verify_no_avoidable(wheel(6), WalkKind::iso, 0, "W6").passed);
  EXPECT_TRUE(verify_no_avoidable(grid_product(3, 3), WalkKind::iso, 1, "P3xP3").passed);
  const auto r = verify_no_avoidable(torus_strip(7), WalkKind::iso, 1, "P7xC7");
  EXPECT_TRUE(r.passed) << to_text(r);
  EXPECT_FALSE(r.witness.empty());
}

TEST(VerifyNoAvoidable, FailsWhenAvoidableOrEmpty) {
  const auto c6 = verify_no_avoidable(cycle_graph(6), WalkKind::pth, 1, "C6");
  EXPECT_FALSE(c6.passed);
  EXPECT_FALSE(c6.witness.empty());
  EXPECT_FALSE(verify_no_avoidable(path_graph(2), WalkKind::iso, 3, "P2").passed);
}

TEST(Claim1, Examples) {
  const MultiGraph g = torus_strip(7);
  EXPECT_TRUE(claim1_characterization(g, through_labels(g, {"(2,1)", "(2,2)", "(2,3)"})));
  EXPECT_FALSE(
      claim1_characterization(g, through_labels(g, {"(1,1)", "(2,1)", "(2,2)", "(1,2)"})));
  EXPECT_THROW(claim1_characterization(cycle_graph(5), walk_through(cycle_graph(5), vs({0, 1}))),
               InputError);
}

TEST(Claim1, AgreesWithIsometryOnShortPaths) {
  const MultiGraph g = torus_strip(7);
  const auto d = oracle::all_pairs(g);
  std::size_t n = 0;
  for (std::size_t len = 0; len <= 3; ++len)
    for (const Walk& p : enumerate_walks(g, WalkKind::pth, len)) {
      ASSERT_EQ(claim1_characterization(g, p), oracle::kind(g, p, WalkKind::iso, false, d))
          << to_string(p);
      ++n;
    }
  EXPECT_GT(n, 1000u);
}

TEST(Claim2, CensusOfSevenStrip) {
  const auto r = claim2_isometric_cycles(7);
  EXPECT_TRUE(r.passed) << to_text(r);
  const MultiGraph g = torus_strip(7);
  SearchBudget budget(10'000'000);
  const auto got = isometric_cycles(g, budget);
  EXPECT_EQ(got, isometric_cycles_by_growth(g));
  std::map<std::size_t, std::size_t> by_length;
  for (const Walk& c : got) ++by_length[c.length()];
  EXPECT_EQ(by_length, (std::map<std::size_t, std::size_t>{{4, 42}, {7, 7}}));
  // the 7-cycles are the rows of constant first coordinate
  for (const Walk& c : got)
    if (c.length() == 7)
      for (VertexId v : c.vertices) EXPECT_EQ(coordinates(g, v).first, coordinates(g, c.front()).first);
}

TEST(Claim2, UnitSquareIsIsometric) {
  const MultiGraph g = torus_strip(7);
  EXPECT_TRUE(classify_closed(g, through_labels(g, {"(3,3)", "(3,4)", "(4,4)", "(4,3)", "(3,3)"}),
                              WalkKind::iso));
}

TEST(IsometricCycles, MatchBruteForceOnSmallGraphs) {
  for (const auto& [name, g] : small_graph_corpus(6)) {
    SearchBudget budget;
    std::set<Walk> want;
    for (std::size_t len = 1; len <= g.vertex_count(); ++len)
      for (const Walk& c : oracle::walks(g, WalkKind::iso, len, true)) want.insert(c);
    ASSERT_EQ(isometric_cycles(g, budget), want) << name;
  }
  SearchBudget budget;
  EXPECT_EQ(isometric_cycles(torus_strip(5), budget), isometric_cycles_by_growth(torus_strip(5)));
}
