#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "avoidable/graph.hpp"

namespace avoidable {

struct CorpusGraph {
  std::string name;
  MultiGraph graph;
};

inline constexpr std::uint64_t kDefaultCorpusSeed = 20230611;

namespace detail {

// Simple graphs on 0..n-1 (n <= 8) as bitmasks over the pairs i < j.
inline std::size_t pair_bit(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline bool mask_has(std::uint32_t mask, std::size_t i, std::size_t j, std::size_t n) {
  return (mask >> pair_bit(i, j, n)) & 1u;
}

// Least relabelled mask over orderings that sort vertices by degree.
inline std::uint32_t canonical_mask(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (mask_has(mask, i, j, n)) ++deg[i], ++deg[j];
  std::vector<std::size_t> ord(n);
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(), [&](auto a, auto b) {
    return deg[a] != deg[b] ? deg[a] < deg[b] : a < b;
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) of equal degree
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg[ord[j]] == deg[ord[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = UINT32_MAX;
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::uint32_t m = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (mask_has(mask, ord[i], ord[j], n)) m |= 1u << pair_bit(i, j, n);
      best = std::min(best, m);
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(ord.begin() + lo, ord.begin() + hi);
    do rec(b + 1);
    while (std::next_permutation(ord.begin() + lo, ord.begin() + hi));
  };
  rec(0);
  return best;
}

inline MultiGraph graph_from_mask(std::uint32_t mask, std::size_t n) {
  MultiGraph g;
  for (std::uint32_t i = 0; i < n; ++i) g.add_vertex(vid(i));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (mask_has(mask, i, j, n)) g.add_edge(vid(i), vid(j));
  return g;
}

}  // namespace detail

/// All connected simple graphs on n vertices up to isomorphism (1 <= n <= 8),
/// with vertices 0..n-1 and edges numbered in lexicographic pair order.
inline std::vector<MultiGraph> connected_graphs(std::size_t n) {
  if (n < 1 || n > 8) throw InputError("connected_graphs supports 1..8 vertices");
  std::set<std::uint32_t> level{0};
  for (std::size_t k = 2; k <= n; ++k) {
    // every connected graph has a vertex whose removal leaves it connected
    std::set<std::uint32_t> next;
    for (std::uint32_t mask : level) {
      std::uint32_t grown = 0;
      for (std::size_t i = 0; i < k - 1; ++i)
        for (std::size_t j = i + 1; j < k - 1; ++j)
          if (detail::mask_has(mask, i, j, k - 1)) grown |= 1u << detail::pair_bit(i, j, k);
      for (std::uint32_t sub = 1; sub < (1u << (k - 1)); ++sub) {
        std::uint32_t m = grown;
        for (std::size_t i = 0; i < k - 1; ++i)
          if ((sub >> i) & 1u) m |= 1u << detail::pair_bit(i, k - 1, k);
        next.insert(detail::canonical_mask(m, k));
      }
    }
    level = std::move(next);
  }
  std::vector<MultiGraph> out;
  for (std::uint32_t mask : level) out.push_back(detail::graph_from_mask(mask, n));
  return out;
}

/// Connected simple graphs with 1..max_n vertices, named "n<k>-<index>".
inline std::vector<CorpusGraph> small_graph_corpus(std::size_t max_n = 7) {
  std::vector<CorpusGraph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto gs = connected_graphs(n);
    for (std::size_t i = 0; i < gs.size(); ++i)
      out.push_back({"n" + std::to_string(n) + "-" + std::to_string(i), std::move(gs[i])});
  }
  return out;
}

/// Seeded random multigraphs with 1..6 vertices and 0..9 edges; loops occur
/// naturally and roughly one edge in five duplicates its predecessor.
inline std::vector<CorpusGraph> random_multigraph_corpus(std::size_t count = 200,
                                                        std::uint64_t seed = kDefaultCorpusSeed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> vertices(1, 6), edges(0, 9);
  std::bernoulli_distribution duplicate(0.2);
  std::vector<CorpusGraph> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint32_t n = vertices(rng), m = edges(rng);
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    MultiGraph g;
    for (std::uint32_t i = 0; i < n; ++i) g.add_vertex(vid(i));
    for (std::uint32_t i = 0; i < m; ++i) {
      if (i > 0 && duplicate(rng)) {
        auto [a, b] = g.endpoints(eid(i - 1));
        g.add_edge(a, b);
      } else {
        const VertexId a = vid(pick(rng));
        g.add_edge(a, vid(pick(rng)));
      }
    }
    out.push_back({"rand-" + std::to_string(k), std::move(g)});
  }
  return out;
}

}  // namespace avoidable
