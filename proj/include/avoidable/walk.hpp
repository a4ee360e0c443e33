#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "avoidable/graph.hpp"

namespace avoidable {

/// Alternating vertex/edge sequence (v0, e1, v1, ..., e_l, v_l).
struct Walk {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  static Walk at(VertexId v) { return Walk{{v}, {}}; }

  std::size_t length() const { return edges.size(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }

  /// Appends edge `e` and vertex `v` at the end.
  void extend(EdgeId e, VertexId v) {
    edges.push_back(e);
    vertices.push_back(v);
  }

  friend auto operator<=>(const Walk&, const Walk&) = default;
  friend bool operator==(const Walk&, const Walk&) = default;
};

inline Walk reversed(const Walk& w) {
  return Walk{{w.vertices.rbegin(), w.vertices.rend()}, {w.edges.rbegin(), w.edges.rend()}};
}

/// Lexicographically smaller of w and its reversal (vertex ids first, then edge ids).
inline Walk canonical(const Walk& w) {
  Walk r = reversed(w);
  return r < w ? r : w;
}

inline bool is_canonical(const Walk& w) { return !(reversed(w) < w); }

/// Subwalk from vertex position `first` spanning `length` edges.
inline Walk subwalk(const Walk& w, std::size_t first, std::size_t length) {
  return Walk{{w.vertices.begin() + first, w.vertices.begin() + first + length + 1},
              {w.edges.begin() + first, w.edges.begin() + first + length}};
}

/// Throws InputError unless `w` is a well-formed walk of `g`.
inline void validate_walk(const MultiGraph& g, const Walk& w) {
  if (w.vertices.empty()) throw InputError("walk has no vertices");
  if (w.vertices.size() != w.edges.size() + 1)
    throw InputError("walk vertex/edge counts do not alternate");
  for (VertexId v : w.vertices) g.require_vertex(v);
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    auto [a, b] = g.endpoints(w.edges[i]);
    VertexId p = w.vertices[i], q = w.vertices[i + 1];
    if (!((a == p && b == q) || (a == q && b == p)))
      throw InputError("edge " + std::to_string(w.edges[i].value) + " does not join vertices " +
                       std::to_string(p.value) + " and " + std::to_string(q.value));
  }
}

/// A walk whose first and last vertices coincide and which has an edge.
inline bool is_closed(const Walk& w) { return w.length() >= 1 && w.front() == w.back(); }

namespace detail {

template <class T>
bool all_distinct(std::vector<T> xs) {
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

// Path whose vertex set spans exactly its own edges: consecutive pairs joined
// by one edge, no other pair joined, no loops. Length 0 is always induced.
inline bool path_is_induced(const MultiGraph& g, const std::vector<VertexId>& vs) {
  if (vs.size() <= 1) return true;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (g.loops_at(vs[i]) != 0) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.multiplicity(vs[i], vs[j]) != (j == i + 1 ? 1u : 0u)) return false;
  }
  return true;
}

template <class Dist>
bool path_is_geodesic(const std::vector<VertexId>& vs, const Dist& dist) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (dist(vs[i], vs[j]) != j - i) return false;
  return true;
}

inline bool classify_unchecked(const MultiGraph& g, const Walk& w, WalkKind t,
                               const Distances* dist) {
  if (t == WalkKind::wlk) return true;
  if (t == WalkKind::trl) return all_distinct(w.edges);
  if (!all_distinct(w.vertices)) return false;
  if (t == WalkKind::pth || w.length() == 0) return true;
  if (!path_is_induced(g, w.vertices)) return false;
  if (t == WalkKind::ind) return true;
  if (dist) return path_is_geodesic(w.vertices, *dist);
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    auto d = bfs_distances(g, w.vertices[i]);
    for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
      if (d[w.vertices[j].value] != j - i) return false;
  }
  return true;
}

inline bool classify_closed_unchecked(const MultiGraph& g, const Walk& w, WalkKind t,
                                      const Distances* dist) {
  if (!is_closed(w)) return false;
  if (t == WalkKind::wlk) return true;
  if (!all_distinct(w.edges)) return false;
  if (t == WalkKind::trl) return true;
  std::vector<VertexId> ring(w.vertices.begin(), w.vertices.end() - 1);
  if (!all_distinct(ring)) return false;
  if (t == WalkKind::pth) return true;
  // induced: the only edges among the ring's vertices are the cycle's own.
  std::size_t spanned = 0;
  for (std::size_t i = 0; i < ring.size(); ++i)
    for (std::size_t j = i; j < ring.size(); ++j) spanned += g.multiplicity(ring[i], ring[j]);
  if (spanned != w.length()) return false;
  if (t == WalkKind::ind) return true;
  const std::size_t len = ring.size();
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Distance> row;
    if (!dist) row = bfs_distances(g, ring[i]);
    for (std::size_t j = i + 1; j < len; ++j) {
      Distance want = std::min(j - i, len - (j - i));
      Distance got = dist ? (*dist)(ring[i], ring[j]) : row[ring[j].value];
      if (got != want) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Whether `w` is a walk of type `t` in `g`. Throws InputError on an
/// incidence violation.
inline bool classify(const MultiGraph& g, const Walk& w, WalkKind t,
                     const Distances* dist = nullptr) {
  validate_walk(g, w);
  return detail::classify_unchecked(g, w, t, dist);
}

/// Whether `w` is a closed walk of type `t`. Closed paths are cycles: edges
/// distinct and vertices distinct except v0 = v_l, so loops (length 1) and
/// parallel pairs (length 2) count. A closed induced walk spans exactly its
/// own edges; a closed isometric walk also realises all host distances.
inline bool classify_closed(const MultiGraph& g, const Walk& w, WalkKind t,
                            const Distances* dist = nullptr) {
  validate_walk(g, w);
  return detail::classify_closed_unchecked(g, w, t, dist);
}

/// Smallest representative of a closed walk under rotation and reversal.
inline Walk canonical_closed(const Walk& w) {
  const std::size_t len = w.length();
  if (len == 0) return w;
  Walk best = w;
  for (int dir = 0; dir < 2; ++dir) {
    Walk base = dir == 0 ? w : reversed(w);
    for (std::size_t r = 0; r < len; ++r) {
      Walk rot;
      for (std::size_t i = 0; i <= len; ++i) rot.vertices.push_back(base.vertices[(r + i) % len]);
      for (std::size_t i = 0; i < len; ++i) rot.edges.push_back(base.edges[(r + i) % len]);
      if (rot < best) best = rot;
    }
  }
  return best;
}

/// Visits every t-walk of length `length` exactly once up to reversal (and,
/// for closed walks, up to rotation), in ascending canonical order.
inline void for_each_walk(const MultiGraph& g, WalkKind t, std::size_t length, bool closed,
                          const std::function<void(const Walk&)>& visit) {
  if (closed && length == 0) return;
  std::optional<Distances> dist;
  if (t == WalkKind::iso) dist.emplace(g);
  const bool vertex_distinct = t >= WalkKind::pth;
  const bool edge_distinct = t >= WalkKind::trl;
  // Inducedness can be pruned along the prefix except for short closed walks,
  // where a parallel pair or loop may itself be the cycle.
  const bool prune_induced = t >= WalkKind::ind && (!closed || length >= 3);

  std::vector<bool> on_walk(g.id_bound(), false);
  std::vector<bool> edge_used(g.next_edge_id().value, false);
  Walk w;

  std::function<void()> grow = [&] {
    const std::size_t m = w.length();
    if (m == length) {
      if (closed) {
        if (detail::classify_closed_unchecked(g, w, t, dist ? &*dist : nullptr) &&
            canonical_closed(w) == w)
          visit(w);
      } else if (is_canonical(w) &&
                 detail::classify_unchecked(g, w, t, dist ? &*dist : nullptr)) {
        visit(w);
      }
      return;
    }
    const VertexId end = w.back();
    for (const Incidence& inc : g.incident(end)) {
      const VertexId z = inc.other;
      const bool closing = closed && m + 1 == length;
      if (edge_distinct && edge_used[inc.edge.value]) continue;
      if (closing && z != w.front()) continue;
      if (vertex_distinct && on_walk[z.value] && !(closing && z == w.front())) continue;
      if (prune_induced && !closing) {
        if (z == end || g.loops_at(z) != 0 || g.multiplicity(end, z) != 1) continue;
        bool chord = false;
        for (std::size_t i = 0; i + 1 < w.vertices.size() && !chord; ++i) {
          const bool closing_pair = closed && i == 0 && m + 2 == length;
          if (!closing_pair && g.adjacent(w.vertices[i], z)) chord = true;
        }
        if (chord) continue;
      }
      w.extend(inc.edge, z);
      if (edge_distinct) edge_used[inc.edge.value] = true;
      const bool mark = !on_walk[z.value];
      on_walk[z.value] = true;
      grow();
      if (mark) on_walk[z.value] = false;
      if (edge_distinct) edge_used[inc.edge.value] = false;
      w.edges.pop_back();
      w.vertices.pop_back();
    }
  };

  for (VertexId start : g.vertices()) {
    if (prune_induced && length >= 1 && g.loops_at(start) != 0) continue;
    w = Walk::at(start);
    on_walk[start.value] = true;
    grow();
    on_walk[start.value] = false;
  }
}

/// All canonical t-walks of the given length, sorted.
inline std::vector<Walk> enumerate_walks(const MultiGraph& g, WalkKind t, std::size_t length,
                                         bool closed = false) {
  std::vector<Walk> out;
  for_each_walk(g, t, length, closed, [&](const Walk& w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Builds the walk through `vertices` using, for each step, the smallest
/// edge id joining consecutive vertices. Throws if a step has no edge.
inline Walk walk_through(const MultiGraph& g, const std::vector<VertexId>& vertices) {
  if (vertices.empty()) throw InputError("walk has no vertices");
  Walk w = Walk::at(vertices.front());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    auto e = g.edge_between(vertices[i - 1], vertices[i]);
    if (!e)
      throw InputError("no edge between " + std::to_string(vertices[i - 1].value) + " and " +
                       std::to_string(vertices[i].value));
    w.extend(*e, vertices[i]);
  }
  return w;
}

inline std::string to_string(const Walk& w) {
  std::string s = std::to_string(w.vertices.front().value);
  for (std::size_t i = 0; i < w.edges.size(); ++i)
    s += "," + std::to_string(w.vertices[i + 1].value) + ":" + std::to_string(w.edges[i].value);
  return s;
}

}  // namespace avoidable
