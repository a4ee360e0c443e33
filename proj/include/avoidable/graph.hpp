#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "avoidable/core.hpp"

namespace avoidable {

/// One entry of a vertex's incidence list. A loop appears once, with
/// `other` equal to the vertex itself.
struct Incidence {
  EdgeId edge;
  VertexId other;
};

/// Finite undirected multigraph with loops and parallel edges.
///
/// Vertex and edge identifiers are stable. Per-id storage is dense in the
/// identifier value, so identifiers should stay reasonably small.
class MultiGraph {
 public:
  MultiGraph() = default;

  /// Adds a vertex with the given id. Throws InputError on a duplicate id.
  void add_vertex(VertexId v, std::string label = {}) {
    if (has_vertex(v)) throw InputError("duplicate vertex id " + std::to_string(v.value));
    grow_vertex_slots(v.value);
    present_[v.value] = true;
    vertices_.insert(std::lower_bound(vertices_.begin(), vertices_.end(), v), v);
    if (!label.empty()) labels_.emplace(v, std::move(label));
    next_vertex_ = std::max(next_vertex_, v.value + 1);
  }

  /// Adds a vertex with a fresh id and returns it.
  VertexId add_vertex() {
    VertexId v{next_vertex_};
    add_vertex(v);
    return v;
  }

  EdgeId add_edge(EdgeId e, VertexId u, VertexId v) {
    if (has_edge(e)) throw InputError("duplicate edge id " + std::to_string(e.value));
    if (!has_vertex(u) || !has_vertex(v))
      throw InputError("edge " + std::to_string(e.value) + " has a dangling endpoint");
    if (e.value >= ends_.size()) {
      ends_.resize(e.value + 1);
      edge_present_.resize(e.value + 1, false);
    }
    edge_present_[e.value] = true;
    ends_[e.value] = {u, v};
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
    insert_incidence(u, Incidence{e, v});
    if (u != v) insert_incidence(v, Incidence{e, u});
    ++multiplicity_[pair_key(u, v)];
    next_edge_ = std::max(next_edge_, e.value + 1);
    return e;
  }

  EdgeId add_edge(VertexId u, VertexId v) { return add_edge(EdgeId{next_edge_}, u, v); }

  bool has_vertex(VertexId v) const { return v.value < present_.size() && present_[v.value]; }
  bool has_edge(EdgeId e) const { return e.value < edge_present_.size() && edge_present_[e.value]; }

  /// Vertex ids in ascending order.
  const std::vector<VertexId>& vertices() const { return vertices_; }
  /// Edge ids in ascending order.
  const std::vector<EdgeId>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    require_edge(e);
    return ends_[e.value];
  }

  /// Endpoint of `e` opposite to `v` (v itself for a loop).
  VertexId other_end(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints(e);
    if (a == v) return b;
    if (b == v) return a;
    throw InputError("edge " + std::to_string(e.value) + " is not incident to vertex " +
                     std::to_string(v.value));
  }

  bool is_loop(EdgeId e) const {
    auto [a, b] = endpoints(e);
    return a == b;
  }

  /// Incidences of `v` sorted by ascending edge id.
  std::span<const Incidence> incident(VertexId v) const {
    require_vertex(v);
    return incidence_[v.value];
  }

  /// Number of edges joining u and v; for u == v, the number of loops at u.
  std::size_t multiplicity(VertexId u, VertexId v) const {
    auto it = multiplicity_.find(pair_key(u, v));
    return it == multiplicity_.end() ? 0 : it->second;
  }

  bool adjacent(VertexId u, VertexId v) const { return u != v && multiplicity(u, v) > 0; }
  std::size_t loops_at(VertexId v) const { return multiplicity(v, v); }

  /// Distinct neighbours other than `v` itself, ascending.
  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const Incidence& inc : incident(v))
      if (inc.other != v) out.push_back(inc.other);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Smallest edge id joining u and v, if any.
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const {
    for (const Incidence& inc : incident(u))
      if (inc.other == v) return inc.edge;
    return std::nullopt;
  }

  const std::string* label(VertexId v) const {
    auto it = labels_.find(v);
    return it == labels_.end() ? nullptr : &it->second;
  }
  const std::map<VertexId, std::string>& labels() const { return labels_; }

  /// First vertex id never used in this graph or any graph it was derived from.
  VertexId next_vertex_id() const { return VertexId{next_vertex_}; }
  EdgeId next_edge_id() const { return EdgeId{next_edge_}; }

  /// Raises the fresh-id watermark; used when deriving graphs.
  void reserve_vertex_ids(VertexId watermark) {
    next_vertex_ = std::max(next_vertex_, watermark.value);
  }
  void reserve_edge_ids(EdgeId watermark) { next_edge_ = std::max(next_edge_, watermark.value); }

  /// Upper bound (exclusive) on vertex id values; sizes dense per-vertex tables.
  std::size_t id_bound() const { return present_.size(); }

  bool has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [&](EdgeId e) { return is_loop(e); });
  }

  bool has_parallel_edges() const {
    return std::any_of(multiplicity_.begin(), multiplicity_.end(), [](const auto& kv) {
      return static_cast<std::uint32_t>(kv.first >> 32) !=
                 static_cast<std::uint32_t>(kv.first & 0xffffffffu) &&
             kv.second > 1;
    });
  }

  bool is_simple() const { return !has_loops() && !has_parallel_edges(); }

  void require_vertex(VertexId v) const {
    if (!has_vertex(v)) throw InputError("unknown vertex id " + std::to_string(v.value));
  }
  void require_edge(EdgeId e) const {
    if (!has_edge(e)) throw InputError("unknown edge id " + std::to_string(e.value));
  }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertices_ != b.vertices_ || a.edges_ != b.edges_ || a.labels_ != b.labels_) return false;
    return std::all_of(a.edges_.begin(), a.edges_.end(),
                       [&](EdgeId e) { return a.ends_[e.value] == b.ends_[e.value]; });
  }

 private:
  static std::uint64_t pair_key(VertexId u, VertexId v) {
    if (v < u) std::swap(u, v);
    return (std::uint64_t{u.value} << 32) | v.value;
  }

  void grow_vertex_slots(std::uint32_t id) {
    if (id >= present_.size()) {
      present_.resize(id + 1, false);
      incidence_.resize(id + 1);
    }
  }

  void insert_incidence(VertexId v, Incidence inc) {
    auto& list = incidence_[v.value];
    auto pos = std::lower_bound(list.begin(), list.end(), inc,
                                [](const Incidence& a, const Incidence& b) { return a.edge < b.edge; });
    list.insert(pos, inc);
  }

  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
  std::vector<bool> present_;
  std::vector<std::vector<Incidence>> incidence_;
  std::vector<bool> edge_present_;
  std::vector<std::pair<VertexId, VertexId>> ends_;
  std::unordered_map<std::uint64_t, std::uint32_t> multiplicity_;
  std::map<VertexId, std::string> labels_;
  std::uint32_t next_vertex_ = 0;
  std::uint32_t next_edge_ = 0;
};

/// Subgraph induced on `keep`, with identifiers, labels and id watermarks preserved.
inline MultiGraph induced_subgraph(const MultiGraph& g, const std::vector<bool>& keep) {
  MultiGraph out;
  for (VertexId v : g.vertices()) {
    if (v.value < keep.size() && keep[v.value]) {
      const std::string* lab = g.label(v);
      out.add_vertex(v, lab ? *lab : std::string{});
    }
  }
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.endpoints(e);
    if (out.has_vertex(a) && out.has_vertex(b)) out.add_edge(e, a, b);
  }
  out.reserve_vertex_ids(g.next_vertex_id());
  out.reserve_edge_ids(g.next_edge_id());
  return out;
}

/// Removes N[s] = s plus every neighbour of s.
inline MultiGraph delete_closed_neighborhood(const MultiGraph& g, std::span<const VertexId> s) {
  std::vector<bool> keep(g.id_bound(), true);
  for (VertexId v : s) {
    g.require_vertex(v);
    keep[v.value] = false;
    for (const Incidence& inc : g.incident(v)) keep[inc.other.value] = false;
  }
  return induced_subgraph(g, keep);
}

inline MultiGraph delete_closed_neighborhood(const MultiGraph& g, VertexId v) {
  return delete_closed_neighborhood(g, std::span<const VertexId>(&v, 1));
}

inline MultiGraph delete_vertices(const MultiGraph& g, std::span<const VertexId> s) {
  std::vector<bool> keep(g.id_bound(), true);
  for (VertexId v : s) {
    g.require_vertex(v);
    keep[v.value] = false;
  }
  return induced_subgraph(g, keep);
}

/// Contracts the non-loop edge `e` into the fresh vertex `new_vertex`.
///
/// Loops created at the merged vertex are dropped and the edges from it to
/// each common neighbour collapse into one edge, which keeps the smallest of
/// the collapsed edge ids. All other vertices and edges keep their ids.
inline MultiGraph contract_edge(const MultiGraph& g, EdgeId e, VertexId new_vertex) {
  auto [u, v] = g.endpoints(e);
  if (u == v) throw InputError("cannot contract loop " + std::to_string(e.value));
  if (g.has_vertex(new_vertex))
    throw InputError("contraction target " + std::to_string(new_vertex.value) + " already exists");
  if (new_vertex < g.next_vertex_id())
    throw InputError("contraction target " + std::to_string(new_vertex.value) +
                     " was already used in this derivation chain");

  MultiGraph out;
  for (VertexId w : g.vertices()) {
    if (w == u || w == v) continue;
    const std::string* lab = g.label(w);
    out.add_vertex(w, lab ? *lab : std::string{});
  }
  out.add_vertex(new_vertex);

  std::map<VertexId, EdgeId> merged;  // neighbour -> smallest collapsed edge id
  for (EdgeId f : g.edges()) {
    auto [a, b] = g.endpoints(f);
    bool a_in = (a == u || a == v), b_in = (b == u || b == v);
    if (a_in && b_in) continue;
    if (!a_in && !b_in) {
      out.add_edge(f, a, b);
      continue;
    }
    VertexId outside = a_in ? b : a;
    merged.try_emplace(outside, f);  // edges() is ascending, first seen is smallest
  }
  for (auto [w, f] : merged) out.add_edge(f, new_vertex, w);
  out.reserve_vertex_ids(g.next_vertex_id());
  out.reserve_edge_ids(g.next_edge_id());
  return out;
}

/// Cartesian product of two simple graphs.
///
/// Vertex (g_i, h_j) (i-th and j-th vertex in ascending id order) gets id
/// i*|V(h)| + j and label "(a,b)" built from the factor labels, falling back
/// to factor ids. Edge ids: first the copies of h's edges for each vertex of
/// g, then the copies of g's edges for each vertex of h.
inline MultiGraph cartesian_product(const MultiGraph& g, const MultiGraph& h) {
  if (!g.is_simple() || !h.is_simple())
    throw InputError("cartesian_product requires simple factors (no loops or parallel edges)");
  const auto& gv = g.vertices();
  const auto& hv = h.vertices();
  const std::uint32_t nh = static_cast<std::uint32_t>(hv.size());
  std::unordered_map<VertexId, std::uint32_t> gi, hi;
  for (std::uint32_t i = 0; i < gv.size(); ++i) gi[gv[i]] = i;
  for (std::uint32_t j = 0; j < hv.size(); ++j) hi[hv[j]] = j;
  auto name = [](const MultiGraph& f, VertexId v) {
    const std::string* lab = f.label(v);
    return lab ? *lab : std::to_string(v.value);
  };
  auto id = [&](std::uint32_t i, std::uint32_t j) { return VertexId{i * nh + j}; };

  MultiGraph out;
  for (std::uint32_t i = 0; i < gv.size(); ++i)
    for (std::uint32_t j = 0; j < hv.size(); ++j)
      out.add_vertex(id(i, j), "(" + name(g, gv[i]) + "," + name(h, hv[j]) + ")");
  for (std::uint32_t i = 0; i < gv.size(); ++i)
    for (EdgeId f : h.edges()) {
      auto [a, b] = h.endpoints(f);
      out.add_edge(id(i, hi[a]), id(i, hi[b]));
    }
  for (std::uint32_t j = 0; j < hv.size(); ++j)
    for (EdgeId f : g.edges()) {
      auto [a, b] = g.endpoints(f);
      out.add_edge(id(gi[a], j), id(gi[b], j));
    }
  return out;
}

struct LineGraph {
  MultiGraph graph;
  std::map<VertexId, EdgeId> origin;      // line-graph vertex -> edge of the base graph
  std::map<EdgeId, VertexId> vertex_of;   // inverse of `origin`
};

/// Line graph: one vertex per edge (ids 0.. in ascending edge order, label
/// "e<id>"); two distinct edges are adjacent iff they share an endpoint. A
/// loop is adjacent to every other edge at its vertex. The result is simple.
inline LineGraph line_graph(const MultiGraph& g) {
  LineGraph lg;
  std::uint32_t next = 0;
  for (EdgeId e : g.edges()) {
    VertexId x{next++};
    lg.graph.add_vertex(x, "e" + std::to_string(e.value));
    lg.origin.emplace(x, e);
    lg.vertex_of.emplace(e, x);
  }
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto [a, b] = g.endpoints(es[i]);
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [c, d] = g.endpoints(es[j]);
      if (a == c || a == d || b == c || b == d)
        lg.graph.add_edge(lg.vertex_of[es[i]], lg.vertex_of[es[j]]);
    }
  }
  return lg;
}

/// Breadth-first distances from `source`, indexed by vertex id value.
inline std::vector<Distance> bfs_distances(const MultiGraph& g, VertexId source) {
  g.require_vertex(source);
  std::vector<Distance> dist(g.id_bound(), kInfinity);
  std::deque<VertexId> queue{source};
  dist[source.value] = 0;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (const Incidence& inc : g.incident(x)) {
      if (dist[inc.other.value] == kInfinity) {
        dist[inc.other.value] = dist[x.value] + 1;
        queue.push_back(inc.other);
      }
    }
  }
  return dist;
}

inline Distance distance(const MultiGraph& g, VertexId u, VertexId v) {
  g.require_vertex(v);
  return bfs_distances(g, u)[v.value];
}

/// All-pairs distance table, computed once by repeated BFS.
class Distances {
 public:
  explicit Distances(const MultiGraph& g) : bound_(g.id_bound()) {
    table_.assign(bound_ * bound_, kInfinity);
    for (VertexId s : g.vertices()) {
      auto row = bfs_distances(g, s);
      std::copy(row.begin(), row.end(), table_.begin() + s.value * bound_);
    }
    for (VertexId a : g.vertices())
      for (VertexId b : g.vertices())
        if (auto d = (*this)(a, b); d != kInfinity) diameter_ = std::max(diameter_, d);
  }

  Distance operator()(VertexId u, VertexId v) const { return table_[u.value * bound_ + v.value]; }
  /// Largest finite distance.
  Distance diameter() const { return diameter_; }

 private:
  std::size_t bound_;
  std::vector<Distance> table_;
  Distance diameter_ = 0;
};

/// Whether u and v are joined in g after removing the vertices and edges
/// flagged in the masks (indexed by id value; empty mask = nothing removed).
inline bool connected_avoiding(const MultiGraph& g, VertexId u, VertexId v,
                               const std::vector<bool>& removed_vertices,
                               const std::vector<bool>& removed_edges) {
  auto vgone = [&](VertexId x) { return x.value < removed_vertices.size() && removed_vertices[x.value]; };
  auto egone = [&](EdgeId e) { return e.value < removed_edges.size() && removed_edges[e.value]; };
  if (vgone(u) || vgone(v)) return false;
  if (u == v) return true;
  std::vector<bool> seen(g.id_bound(), false);
  std::vector<VertexId> stack{u};
  seen[u.value] = true;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(x)) {
      if (egone(inc.edge) || vgone(inc.other) || seen[inc.other.value]) continue;
      if (inc.other == v) return true;
      seen[inc.other.value] = true;
      stack.push_back(inc.other);
    }
  }
  return false;
}

inline bool is_connected(const MultiGraph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = bfs_distances(g, g.vertices().front());
  return std::all_of(g.vertices().begin(), g.vertices().end(),
                     [&](VertexId v) { return d[v.value] != kInfinity; });
}

/// Vertex ids of the connected component containing `v`, ascending.
inline std::vector<VertexId> component_of(const MultiGraph& g, VertexId v) {
  auto d = bfs_distances(g, v);
  std::vector<VertexId> out;
  for (VertexId x : g.vertices())
    if (d[x.value] != kInfinity) out.push_back(x);
  return out;
}

/// Subgraph given by explicit vertex and edge sets (not necessarily induced).
inline MultiGraph subgraph(const MultiGraph& g, const std::set<VertexId>& hv,
                           const std::set<EdgeId>& he) {
  MultiGraph h;
  for (VertexId v : hv) {
    g.require_vertex(v);
    h.add_vertex(v);
  }
  for (EdgeId e : he) {
    auto [a, b] = g.endpoints(e);
    if (!hv.count(a) || !hv.count(b))
      throw InputError("edge " + std::to_string(e.value) + " leaves the given vertex set");
    h.add_edge(e, a, b);
  }
  return h;
}

/// True iff d_H(u,v) = d_G(u,v) for all u, v in H.
inline bool is_isometric_subgraph(const MultiGraph& g, const std::set<VertexId>& hv,
                                  const std::set<EdgeId>& he) {
  MultiGraph h = subgraph(g, hv, he);
  for (VertexId u : hv) {
    auto dh = bfs_distances(h, u);
    auto dg = bfs_distances(g, u);
    for (VertexId v : hv)
      if (dh[v.value] != dg[v.value]) return false;
  }
  return true;
}

}  // namespace avoidable
