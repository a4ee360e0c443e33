#pragma once

#include <map>
#include <utility>
#include <vector>

#include "avoidable/walk.hpp"

namespace avoidable {

/// Depth-first search tree of one connected component.
struct DfsTree {
  VertexId root;
  std::map<VertexId, std::pair<VertexId, EdgeId>> parent;  // non-root vertices only
  std::map<VertexId, std::size_t> discovery;               // rank in discovery order
  std::map<VertexId, std::vector<VertexId>> children;      // in discovery order
  std::map<VertexId, std::size_t> depth;

  bool contains(VertexId v) const { return discovery.count(v) != 0; }

  /// Whether `a` is an ancestor of `b` (every vertex is its own ancestor).
  bool is_ancestor(VertexId a, VertexId b) const {
    while (true) {
      if (a == b) return true;
      auto it = parent.find(b);
      if (it == parent.end()) return false;
      b = it->second.first;
    }
  }

  /// Tree path from `v` up to the root, starting at v.
  std::vector<VertexId> path_to_root(VertexId v) const {
    std::vector<VertexId> out{v};
    for (auto it = parent.find(v); it != parent.end(); it = parent.find(it->second.first))
      out.push_back(it->second.first);
    return out;
  }
};

/// DFS tree of the component containing `seed`, rooted at seed's first
/// vertex, whose first branch is exactly the seed path. Other neighbours are
/// explored in ascending edge-id order.
inline DfsTree dfs_tree(const MultiGraph& g, const Walk& seed) {
  if (!classify(g, seed, WalkKind::pth)) throw InputError("dfs_tree seed is not a path");
  DfsTree t;
  t.root = seed.front();
  std::size_t rank = 0;

  struct Frame {
    VertexId v;
    std::size_t next;  // index into the incidence list
  };
  std::vector<Frame> stack;
  auto enter = [&](VertexId v, std::optional<std::pair<VertexId, EdgeId>> via) {
    t.discovery[v] = rank++;
    t.children[v];
    if (via) {
      t.parent[v] = *via;
      t.children[via->first].push_back(v);
      t.depth[v] = t.depth[via->first] + 1;
    } else {
      t.depth[v] = 0;
    }
    stack.push_back(Frame{v, 0});
  };

  enter(seed.front(), std::nullopt);
  for (std::size_t i = 0; i < seed.length(); ++i)
    enter(seed.vertices[i + 1], std::make_pair(seed.vertices[i], seed.edges[i]));

  while (!stack.empty()) {
    Frame& top = stack.back();
    auto inc = g.incident(top.v);
    if (top.next == inc.size()) {
      stack.pop_back();
      continue;
    }
    const Incidence& next = inc[top.next++];
    if (!t.contains(next.other)) enter(next.other, std::make_pair(top.v, next.edge));
  }
  return t;
}

}  // namespace avoidable
