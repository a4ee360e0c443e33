#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "avoidable/walk.hpp"

namespace avoidable {

/// W' = (v0, e0, W, e_k, v_{k+1}) where W' is again a walk of the same type.
struct Extension {
  Walk base;
  Walk extended;
  VertexId prefix_vertex;
  EdgeId prefix_edge;
  EdgeId suffix_edge;
  VertexId suffix_vertex;
};

inline void require_kind(const MultiGraph& g, const Walk& w, WalkKind t) {
  if (!classify(g, w, t))
    throw InputError("walk " + to_string(w) + " is not of type " + std::string(to_string(t)));
}

/// All t-extensions of `w`. When `w` equals its own reversal, an extension
/// and its reversal are the same object and are listed once.
inline std::vector<Extension> extensions(const MultiGraph& g, const Walk& w, WalkKind t) {
  require_kind(g, w, t);
  std::optional<Distances> dist;
  if (t == WalkKind::iso) dist.emplace(g);
  const bool symmetric = reversed(w) == w;
  std::set<Walk> seen;
  std::vector<Extension> out;
  for (const Incidence& pre : g.incident(w.front())) {
    for (const Incidence& suf : g.incident(w.back())) {
      Walk ext = Walk::at(pre.other);
      ext.extend(pre.edge, w.front());
      for (std::size_t i = 0; i < w.length(); ++i) ext.extend(w.edges[i], w.vertices[i + 1]);
      ext.extend(suf.edge, suf.other);
      if (!detail::classify_unchecked(g, ext, t, dist ? &*dist : nullptr)) continue;
      if (symmetric && !seen.insert(canonical(ext)).second) continue;
      out.push_back(Extension{w, std::move(ext), pre.other, pre.edge, suf.edge, suf.other});
    }
  }
  return out;
}

inline bool is_simplicial(const MultiGraph& g, const Walk& w, WalkKind t) {
  return extensions(g, w, t).empty();
}

namespace detail {

// Exhaustive search for a closed t-walk w.R, R a nonempty walk from w's end
// back to its start (or R empty when w is itself closed). Pruning enforces
// the distinctness built into the type and, for induced cycles, rejects
// vertices with a chord into the partial cycle.
inline std::optional<Walk> closure_by_enumeration(const MultiGraph& g, const Walk& w, WalkKind t,
                                                  SearchBudget& budget) {
  if (is_closed(w) && classify_closed_unchecked(g, w, t, nullptr)) return w;
  const bool vertex_distinct = t >= WalkKind::pth;
  const bool edge_distinct = t >= WalkKind::trl;
  std::size_t max_length = 0;
  switch (t) {
    case WalkKind::wlk: max_length = w.length() + g.vertex_count(); break;
    case WalkKind::trl: max_length = g.edge_count(); break;
    default: max_length = g.vertex_count(); break;
  }
  if (vertex_distinct && !all_distinct(w.vertices)) return std::nullopt;

  std::vector<int> visits(g.id_bound(), 0);
  std::vector<bool> edge_used(g.next_edge_id().value, false);
  for (VertexId v : w.vertices) ++visits[v.value];
  for (EdgeId e : w.edges) edge_used[e.value] = true;
  Walk c = w;
  std::optional<Walk> found;

  // Walks search by iterative deepening so the shortest return is found
  // first; the other kinds are bounded by distinctness already.
  // For induced cycles: 0 = z may be added freely, 1 = only if the next step
  // closes, -1 = never.
  auto induced_step = [&](VertexId z) {
    if (g.loops_at(z) != 0) return -1;
    int verdict = 0;
    if (g.multiplicity(c.back(), z) > 1) {
      if (c.back() != w.front()) return -1;
      verdict = 1;
    }
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i) {
      if (!g.adjacent(c.vertices[i], z)) continue;
      if (c.vertices[i] != w.front()) return -1;
      verdict = 1;
    }
    return verdict;
  };

  std::function<bool(std::size_t, bool)> grow = [&](std::size_t limit, bool must_close) -> bool {
    budget.spend();
    for (const Incidence& inc : g.incident(c.back())) {
      if (edge_distinct && edge_used[inc.edge.value]) continue;
      const VertexId z = inc.other;
      const bool closes = z == w.front();
      if (must_close && !closes) continue;
      if (vertex_distinct && visits[z.value] > 0 && !closes) continue;
      int step = 0;
      if (t == WalkKind::ind && !closes) {
        step = induced_step(z);
        if (step < 0) continue;
      }
      c.extend(inc.edge, z);
      if (closes && classify_closed_unchecked(g, c, t, nullptr)) {
        found = c;
        return true;
      }
      bool done = false;
      if (!(vertex_distinct && closes) && c.length() < limit) {
        ++visits[z.value];
        if (edge_distinct) edge_used[inc.edge.value] = true;
        done = grow(limit, step == 1);
        --visits[z.value];
        if (edge_distinct) edge_used[inc.edge.value] = false;
      }
      c.edges.pop_back();
      c.vertices.pop_back();
      if (done) return true;
    }
    return false;
  };

  if (t == WalkKind::wlk) {
    for (std::size_t limit = w.length() + 1; limit <= max_length; ++limit)
      if (grow(limit, false)) return found;
    return std::nullopt;
  }
  if (max_length > w.length() && grow(max_length, false)) return found;
  return std::nullopt;
}

// Search for an isometric cycle through the isometric path w. Along the
// partial path u_0..u_m every pair at index distance k must satisfy
// d(u_i,u_j) = min(k, L-k) for the final cycle length L: equality with k
// forces L >= 2k, anything smaller pins L = k + d.
inline std::optional<Walk> isometric_closure(const MultiGraph& g, const Walk& w,
                                             const Distances& dist, SearchBudget& budget) {
  if (w.length() == 0) {
    const VertexId v = w.front();
    if (g.loops_at(v) == 1) {
      for (const Incidence& inc : g.incident(v))
        if (inc.other == v) return Walk{{v, v}, {inc.edge}};
    }
    if (g.loops_at(v) == 0) {
      for (VertexId u : g.neighbors(v)) {
        if (g.multiplicity(v, u) != 2 || g.loops_at(u) != 0) continue;
        Walk c = Walk::at(v);
        for (const Incidence& inc : g.incident(v))
          if (inc.other == u) c.extend(inc.edge, c.back() == v ? u : v);
        if (classify_closed_unchecked(g, c, WalkKind::iso, &dist)) return c;
      }
    }
  }
  if (!path_is_induced(g, w.vertices) || (w.length() >= 1 && !all_distinct(w.vertices)))
    return std::nullopt;
  if (g.loops_at(w.front()) != 0) return std::nullopt;

  const std::size_t max_cycle =
      std::min<std::size_t>(g.vertex_count(), 2 * dist.diameter() + 1);
  std::vector<VertexId> path = w.vertices;
  std::vector<bool> on_path(g.id_bound(), false);
  for (VertexId v : path) on_path[v.value] = true;

  std::size_t min_len = std::max<std::size_t>(3, 2 * w.length());
  std::optional<std::size_t> fixed_len;
  std::optional<Walk> found;

  std::function<bool(std::size_t, std::optional<std::size_t>)> grow =
      [&](std::size_t lo, std::optional<std::size_t> fixed) -> bool {
    budget.spend();
    const VertexId end = path.back();
    const std::size_t m = path.size() - 1;  // index of `end`
    for (VertexId z : g.neighbors(end)) {
      if (on_path[z.value] || g.loops_at(z) != 0 || g.multiplicity(end, z) != 1) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 <= m && !chord; ++i)
        if (g.adjacent(path[i], z)) chord = true;
      if (chord) continue;
      const bool closing = m >= 1 && g.adjacent(path.front(), z);
      if (closing && g.multiplicity(path.front(), z) != 1) continue;
      std::size_t nlo = lo;
      std::optional<std::size_t> nfixed = fixed;
      bool ok = true;
      for (std::size_t i = 0; i <= m && ok; ++i) {
        const std::size_t k = m + 1 - i;
        const Distance d = dist(path[i], z);
        if (d == k) {
          nlo = std::max(nlo, 2 * k);
        } else if (d < k) {
          if (nfixed && *nfixed != k + d) ok = false;
          nfixed = k + d;
        } else {
          ok = false;
        }
      }
      const std::size_t vertices_now = m + 2;
      if (!ok || nlo > max_cycle) continue;
      if (nfixed && (*nfixed < nlo || *nfixed < vertices_now || *nfixed > max_cycle)) continue;
      if (closing) {
        if (nfixed && *nfixed != vertices_now) continue;
        Walk c = walk_through(g, path);
        c.extend(*g.edge_between(end, z), z);
        c.extend(*g.edge_between(z, path.front()), path.front());
        if (classify_closed_unchecked(g, c, WalkKind::iso, &dist)) {
          found = std::move(c);
          return true;
        }
        continue;
      }
      if (nfixed && vertices_now >= *nfixed) continue;
      if (!nfixed && vertices_now >= max_cycle) continue;
      path.push_back(z);
      on_path[z.value] = true;
      const bool done = grow(nlo, nfixed);
      on_path[z.value] = false;
      path.pop_back();
      if (done) return true;
    }
    return false;
  };

  if (grow(min_len, fixed_len)) {
    // Re-thread the original edges of w into the cycle.
    Walk c = *found;
    for (std::size_t i = 0; i < w.length(); ++i) c.edges[i] = w.edges[i];
    return c;
  }
  return std::nullopt;
}

inline bool trail_closable_fast(const MultiGraph& g, const Walk& w) {
  if (w.length() >= 1) {
    if (is_closed(w)) return true;
    std::vector<bool> gone_edges(g.next_edge_id().value, false);
    for (EdgeId e : w.edges) gone_edges[e.value] = true;
    return connected_avoiding(g, w.back(), w.front(), {}, gone_edges);
  }
  // A lone vertex lies on a closed trail iff it has a loop or a non-bridge edge.
  const VertexId v = w.front();
  for (const Incidence& inc : g.incident(v)) {
    if (inc.other == v) return true;
    std::vector<bool> gone_edges(g.next_edge_id().value, false);
    gone_edges[inc.edge.value] = true;
    if (connected_avoiding(g, v, inc.other, {}, gone_edges)) return true;
  }
  return false;
}

inline bool path_closable_fast(const MultiGraph& g, const Walk& w) {
  if (w.length() == 0) return trail_closable_fast(g, w);
  std::vector<bool> gone_vertices(g.id_bound(), false);
  std::vector<bool> gone_edges(g.next_edge_id().value, false);
  for (std::size_t i = 1; i + 1 < w.vertices.size(); ++i) gone_vertices[w.vertices[i].value] = true;
  for (EdgeId e : w.edges) gone_edges[e.value] = true;
  return connected_avoiding(g, w.back(), w.front(), gone_vertices, gone_edges);
}

// Induced path x..y of length >= 1: closable iff x and y are joined in
// H = G - (N[internal] \ {x,y}) - looped vertices - edges xy. A shortest
// x,y-path in H closes W into an induced cycle provided no two vertices of
// that component are joined by parallel edges; otherwise defer to search.
inline bool induced_closable_fast(const MultiGraph& g, const Walk& w, SearchBudget& budget) {
  const VertexId x = w.front(), y = w.back();
  if (w.length() == 0) {
    const std::size_t loops = g.loops_at(x);
    if (loops == 1) return true;
    if (loops > 1) return false;
    for (const Incidence& inc : g.incident(x)) {
      const VertexId u = inc.other;
      const std::size_t mult = g.multiplicity(x, u);
      if (g.loops_at(u) != 0) continue;
      if (mult == 2) return true;
      if (mult == 1 && induced_closable_fast(g, Walk{{x, u}, {inc.edge}}, budget)) return true;
    }
    return false;
  }
  std::vector<bool> gone(g.id_bound(), false);
  for (std::size_t i = 1; i + 1 < w.vertices.size(); ++i) {
    gone[w.vertices[i].value] = true;
    for (const Incidence& inc : g.incident(w.vertices[i])) gone[inc.other.value] = true;
  }
  for (VertexId v : g.vertices())
    if (g.loops_at(v) != 0) gone[v.value] = true;
  gone[x.value] = gone[y.value] = false;

  // Component of x in H.
  std::vector<bool> seen(g.id_bound(), false);
  std::vector<VertexId> stack{x}, component{x};
  seen[x.value] = true;
  while (!stack.empty()) {
    VertexId a = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(a)) {
      const VertexId b = inc.other;
      if (gone[b.value] || seen[b.value]) continue;
      if ((a == x && b == y) || (a == y && b == x)) continue;
      seen[b.value] = true;
      stack.push_back(b);
      component.push_back(b);
    }
  }
  if (!seen[y.value]) return false;
  for (std::size_t i = 0; i < component.size(); ++i)
    for (std::size_t j = i + 1; j < component.size(); ++j)
      if (g.multiplicity(component[i], component[j]) > 1)
        return closure_by_enumeration(g, w, WalkKind::ind, budget).has_value();
  return true;
}

}  // namespace detail

/// A closed t-walk containing `w` as a contiguous (cyclic) subwalk, found by
/// exhaustive search. Isometric walks use the distance-pruned search.
inline std::optional<Walk> find_closing_walk(const MultiGraph& g, const Walk& w, WalkKind t,
                                             SearchBudget& budget) {
  require_kind(g, w, t);
  if (t == WalkKind::iso) {
    Distances dist(g);
    return detail::isometric_closure(g, w, dist, budget);
  }
  return detail::closure_by_enumeration(g, w, t, budget);
}

/// Whether `w` is a subwalk of some closed t-walk of `g`.
inline bool is_closable(const MultiGraph& g, const Walk& w, WalkKind t, Mode mode,
                        SearchBudget& budget) {
  if (mode == Mode::oracle) return find_closing_walk(g, w, t, budget).has_value();
  require_kind(g, w, t);
  switch (t) {
    case WalkKind::wlk:
      return w.length() >= 1 || !g.incident(w.front()).empty();
    case WalkKind::trl:
      return detail::trail_closable_fast(g, w);
    case WalkKind::pth:
      return detail::path_closable_fast(g, w);
    case WalkKind::ind:
      return detail::induced_closable_fast(g, w, budget);
    case WalkKind::iso: {
      Distances dist(g);
      return detail::isometric_closure(g, w, dist, budget).has_value();
    }
  }
  return false;
}

inline bool is_closable(const MultiGraph& g, const Walk& w, WalkKind t, Mode mode = Mode::fast) {
  SearchBudget budget;
  return is_closable(g, w, t, mode, budget);
}

/// First t-extension of `w` that is not t-closable, if any.
inline std::optional<Extension> non_closable_extension(const MultiGraph& g, const Walk& w,
                                                       WalkKind t, Mode mode,
                                                       SearchBudget& budget) {
  for (Extension& ext : extensions(g, w, t))
    if (!is_closable(g, ext.extended, t, mode, budget)) return std::move(ext);
  return std::nullopt;
}

/// Every t-extension of `w` is t-closable (vacuous for simplicial walks).
inline bool is_avoidable(const MultiGraph& g, const Walk& w, WalkKind t, Mode mode,
                         SearchBudget& budget) {
  return !non_closable_extension(g, w, t, mode, budget).has_value();
}

inline bool is_avoidable(const MultiGraph& g, const Walk& w, WalkKind t, Mode mode = Mode::fast) {
  SearchBudget budget;
  return is_avoidable(g, w, t, mode, budget);
}

}  // namespace avoidable
