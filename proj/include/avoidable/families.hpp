#pragma once

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "avoidable/avoidability.hpp"
#include "avoidable/report.hpp"

namespace avoidable {

struct FamilySpec {
  std::string family;
  std::vector<long> params;
};

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "loop-pair", "dipole",     "complete",    "complete-bipartite", "wheel",
      "path-graph", "cycle-graph", "grid-product", "torus-strip"};
  return names;
}

/// u = 0, v = 1; edge 0 joins them, edges 1 and 2 are the loops at u and v.
inline MultiGraph loop_pair() {
  MultiGraph g;
  g.add_vertex(vid(0), "u");
  g.add_vertex(vid(1), "v");
  g.add_edge(vid(0), vid(1));
  g.add_edge(vid(0), vid(0));
  g.add_edge(vid(1), vid(1));
  return g;
}

/// Two vertices 0 and 1 joined by m parallel edges 0..m-1.
inline MultiGraph dipole(std::size_t m) {
  if (m < 1) throw InputError("dipole needs at least one edge");
  MultiGraph g;
  g.add_vertex(vid(0));
  g.add_vertex(vid(1));
  for (std::size_t i = 0; i < m; ++i) g.add_edge(vid(0), vid(1));
  return g;
}

/// K_n on 0..n-1; edges in lexicographic order of their endpoint pairs.
inline MultiGraph complete(std::size_t n) {
  if (n < 1) throw InputError("complete graph needs at least one vertex");
  MultiGraph g;
  for (std::uint32_t i = 0; i < n; ++i) g.add_vertex(vid(i));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(vid(i), vid(j));
  return g;
}

/// K_{a,b}: parts 0..a-1 and a..a+b-1.
inline MultiGraph complete_bipartite(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw InputError("complete bipartite graph needs nonempty parts");
  MultiGraph g;
  for (std::uint32_t i = 0; i < a + b; ++i) g.add_vertex(vid(i));
  for (std::uint32_t i = 0; i < a; ++i)
    for (std::uint32_t j = 0; j < b; ++j) g.add_edge(vid(i), vid(static_cast<std::uint32_t>(a) + j));
  return g;
}

/// W_n: rim 0..n-1 with rim edges 0..n-1 (edge i joins i and i+1 mod n),
/// hub n, spokes n..2n-1.
inline MultiGraph wheel(std::size_t n) {
  if (n < 3) throw InputError("wheel needs a rim of at least 3 vertices");
  MultiGraph g;
  const auto m = static_cast<std::uint32_t>(n);
  for (std::uint32_t i = 0; i <= m; ++i) g.add_vertex(vid(i), i == m ? "hub" : "");
  for (std::uint32_t i = 0; i < m; ++i) g.add_edge(vid(i), vid((i + 1) % m));
  for (std::uint32_t i = 0; i < m; ++i) g.add_edge(vid(m), vid(i));
  return g;
}

/// P_n on 0..n-1 labelled "1".."n"; edge i joins i and i+1.
inline MultiGraph path_graph(std::size_t n) {
  if (n < 1) throw InputError("path graph needs at least one vertex");
  MultiGraph g;
  for (std::uint32_t i = 0; i < n; ++i) g.add_vertex(vid(i), std::to_string(i + 1));
  for (std::uint32_t i = 0; i + 1 < n; ++i) g.add_edge(vid(i), vid(i + 1));
  return g;
}

/// C_n on 0..n-1 labelled "1".."n"; edge i joins i and i+1 mod n.
inline MultiGraph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle graph needs at least 3 vertices");
  MultiGraph g;
  const auto m = static_cast<std::uint32_t>(n);
  for (std::uint32_t i = 0; i < m; ++i) g.add_vertex(vid(i), std::to_string(i + 1));
  for (std::uint32_t i = 0; i < m; ++i) g.add_edge(vid(i), vid((i + 1) % m));
  return g;
}

/// P_a □ P_b with labels "(i,j)", 1-based.
inline MultiGraph grid_product(std::size_t a, std::size_t b) {
  return cartesian_product(path_graph(a), path_graph(b));
}

/// P_n □ C_n for odd n >= 3, labels "(i,j)" with i on the path, j on the cycle.
inline MultiGraph torus_strip(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw InputError("torus strip needs an odd n >= 3");
  return cartesian_product(path_graph(n), cycle_graph(n));
}

inline MultiGraph build(const FamilySpec& spec) {
  auto need = [&](std::size_t k) {
    if (spec.params.size() != k)
      throw InputError(spec.family + " takes " + std::to_string(k) + " parameter(s)");
    for (long p : spec.params)
      if (p < 0) throw InputError(spec.family + " parameters must be non-negative");
  };
  auto at = [&](std::size_t i) { return static_cast<std::size_t>(spec.params[i]); };
  const std::string& f = spec.family;
  if (f == "loop-pair") return need(0), loop_pair();
  if (f == "dipole") return need(1), dipole(at(0));
  if (f == "complete") return need(1), complete(at(0));
  if (f == "complete-bipartite") return need(2), complete_bipartite(at(0), at(1));
  if (f == "wheel") return need(1), wheel(at(0));
  if (f == "path-graph") return need(1), path_graph(at(0));
  if (f == "cycle-graph") return need(1), cycle_graph(at(0));
  if (f == "grid-product") return need(2), grid_product(at(0), at(1));
  if (f == "torus-strip") return need(1), torus_strip(at(0));
  throw InputError("unknown family '" + f + "'");
}

/// P_n □ C_n with n the smallest odd integer above 2l+4.
inline MultiGraph iso_counterexample(std::size_t length) {
  if (length == 0)
    throw InputError("length 0 has no torus-strip counterexample; use wheel(6) instead");
  return torus_strip(2 * length + 5);
}

/// Vertex permutations preserving all multiplicities (loops included),
/// as maps indexed by vertex id value. Brute force; meant for small graphs.
inline std::vector<std::vector<VertexId>> automorphisms(const MultiGraph& g) {
  const auto& vs = g.vertices();
  std::vector<std::size_t> perm(vs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<VertexId>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < vs.size() && ok; ++i)
      for (std::size_t j = i; j < vs.size() && ok; ++j)
        ok = g.multiplicity(vs[i], vs[j]) == g.multiplicity(vs[perm[i]], vs[perm[j]]);
    if (!ok) continue;
    std::vector<VertexId> map(g.id_bound());
    for (std::size_t i = 0; i < vs.size(); ++i) map[vs[i].value] = vs[perm[i]];
    out.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Number of walks in `walks` that are pairwise inequivalent under graph
/// automorphisms (vertex maps together with edge permutations inside each
/// parallel class) and reversal.
inline std::size_t count_up_to_symmetry(const MultiGraph& g, const std::vector<Walk>& walks) {
  const auto autos = automorphisms(g);
  using Key = std::pair<std::vector<VertexId>, std::vector<std::size_t>>;
  auto pattern = [](const std::vector<EdgeId>& es) {
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < es.size(); ++i)
      p.push_back(static_cast<std::size_t>(std::find(es.begin(), es.end(), es[i]) - es.begin()));
    return p;
  };
  std::set<Key> orbits;
  for (const Walk& w : walks) {
    std::optional<Key> best;
    for (const Walk& o : {w, reversed(w)}) {
      const auto pat = pattern(o.edges);
      for (const auto& a : autos) {
        Key k{{}, pat};
        for (VertexId v : o.vertices) k.first.push_back(a[v.value]);
        if (!best || k < *best) best = std::move(k);
      }
    }
    orbits.insert(*best);
  }
  return orbits.size();
}

/// Checks that g has t-walks of length l and that none is t-avoidable
/// (oracle mode). Witnesses are one non-closable extension per walk.
inline VerificationReport verify_no_avoidable(const MultiGraph& g, WalkKind t, std::size_t length,
                                              std::string claim = "no-avoidable") {
  Stopwatch clock;
  VerificationReport r;
  r.claim = std::move(claim);
  r.instance = std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges, " + std::string(to_string(t)) +
               ", length " + std::to_string(length);
  const auto walks = enumerate_walks(g, t, length);
  SearchBudget budget;
  if (walks.empty()) {
    r.detail = "no walk of this type and length exists";
  } else {
    r.passed = true;
    for (const Walk& w : walks) {
      auto ext = non_closable_extension(g, w, t, Mode::oracle, budget);
      if (!ext) {
        r.passed = false;
        r.witness = {w};
        r.detail = "walk is avoidable";
        break;
      }
      r.witness.push_back(ext->extended);
    }
    if (r.passed) r.detail = std::to_string(walks.size()) + " walks, none avoidable";
  }
  r.budget_used = budget.used();
  r.seconds = clock.seconds();
  return r;
}

/// Reads a "(i,j)" coordinate label.
inline std::pair<long, long> coordinates(const MultiGraph& g, VertexId v) {
  const std::string* lab = g.label(v);
  long i = 0, j = 0;
  char tail = 0;
  if (!lab || std::sscanf(lab->c_str(), "(%ld,%ld%c", &i, &j, &tail) != 3 || tail != ')')
    throw InputError("vertex " + std::to_string(v.value) + " has no coordinate label");
  return {i, j};
}

/// For both coordinates: whenever two vertices of the walk share a value,
/// every vertex between them along the walk has that value too.
inline bool claim1_characterization(const MultiGraph& g, const Walk& w) {
  std::vector<std::pair<long, long>> cs;
  for (VertexId v : w.vertices) cs.push_back(coordinates(g, v));
  for (int c = 0; c < 2; ++c) {
    auto val = [&](std::size_t k) { return c == 0 ? cs[k].first : cs[k].second; };
    for (std::size_t a = 0; a < cs.size(); ++a)
      for (std::size_t b = a + 2; b < cs.size(); ++b)
        if (val(a) == val(b))
          for (std::size_t m = a + 1; m < b; ++m)
            if (val(m) != val(a)) return false;
  }
  return true;
}

inline bool claim1_characterization(const MultiGraph& g, const Walk& w, std::size_t length) {
  if (w.length() > length + 2) throw InputError("claim 1 covers paths of length at most l+2");
  return claim1_characterization(g, w);
}

/// Every isometric cycle of g, as canonical closed walks, by a search that
/// keeps each partial cycle consistent with cycle distances.
inline std::set<Walk> isometric_cycles(const MultiGraph& g, SearchBudget& budget) {
  const Distances dist(g);
  std::set<Walk> out;
  const Distance diam = dist.diameter();
  const std::size_t max_len =
      std::min<std::size_t>(g.vertex_count(), diam == kInfinity ? g.vertex_count() : 2 * diam + 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    auto want = [&](std::size_t gap) { return std::min(gap, len - gap); };
    for (VertexId start : g.vertices()) {
      Walk w = Walk::at(start);
      std::vector<bool> on(g.id_bound(), false);
      on[start.value] = true;
      std::function<void()> grow = [&] {
        budget.spend();
        const std::size_t m = w.length();
        for (const Incidence& inc : g.incident(w.back())) {
          if (std::find(w.edges.begin(), w.edges.end(), inc.edge) != w.edges.end()) continue;
          const VertexId z = inc.other;
          if (m + 1 == len) {
            if (z != start) continue;
            Walk c = w;
            c.extend(inc.edge, z);
            if (classify_closed(g, c, WalkKind::iso, &dist)) out.insert(canonical_closed(c));
            continue;
          }
          if (on[z.value] || z < start) continue;
          bool ok = true;
          for (std::size_t i = 0; i <= m && ok; ++i)
            ok = dist(w.vertices[i], z) == want(m + 1 - i);
          if (!ok) continue;
          w.extend(inc.edge, z);
          on[z.value] = true;
          grow();
          on[z.value] = false;
          w.edges.pop_back();
          w.vertices.pop_back();
        }
      };
      grow();
    }
  }
  return out;
}

/// Isometric-cycle census of P_n □ C_n against the unit 4-cycles and the
/// n-cycles with constant first coordinate.
inline VerificationReport claim2_isometric_cycles(std::size_t n,
                                                  std::size_t budget_limit = 10'000'000) {
  Stopwatch clock;
  const MultiGraph g = torus_strip(n);
  const auto m = static_cast<std::uint32_t>(n);
  auto at = [&](std::uint32_t i, std::uint32_t j) { return vid(i * m + j % m); };  // 0-based
  std::set<Walk> expected;
  for (std::uint32_t i = 0; i + 1 < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j)
      expected.insert(canonical_closed(
          walk_through(g, {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1), at(i, j)})));
  for (std::uint32_t i = 0; i < m; ++i) {
    std::vector<VertexId> ring;
    for (std::uint32_t j = 0; j <= m; ++j) ring.push_back(at(i, j));
    expected.insert(canonical_closed(walk_through(g, ring)));
  }

  SearchBudget budget(budget_limit);
  const std::set<Walk> found = isometric_cycles(g, budget);
  VerificationReport r;
  r.claim = "isometric-cycle-census";
  std::size_t fours = 0, ns = 0;
  for (const Walk& c : found) {
    if (c.length() == 4) ++fours;
    else if (c.length() == n) ++ns;
  }
  r.instance = "P" + std::to_string(n) + "xC" + std::to_string(n);
  r.detail = std::to_string(found.size()) + " isometric cycles (" + std::to_string(fours) +
             " of length 4, " + std::to_string(ns) + " of length " + std::to_string(n) + ")";
  r.passed = found == expected;
  if (!r.passed) {
    for (const Walk& c : found)
      if (!expected.count(c)) r.witness.push_back(c);
    for (const Walk& c : expected)
      if (!found.count(c)) r.witness.push_back(c);
  }
  r.budget_used = budget.used();
  r.seconds = clock.seconds();
  return r;
}

}  // namespace avoidable
