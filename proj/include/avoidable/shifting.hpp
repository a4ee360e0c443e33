#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "avoidable/avoidability.hpp"
#include "avoidable/dfs.hpp"
#include "avoidable/report.hpp"

namespace avoidable {

/// Same-length t-walks of one host graph, consecutive entries being shifts.
struct ShiftSequence {
  WalkKind kind = WalkKind::wlk;
  std::vector<Walk> steps;

  std::size_t shifts() const { return steps.empty() ? 0 : steps.size() - 1; }
  const Walk& back() const { return steps.back(); }
};

struct ShiftStats {
  std::size_t length = 0;  // number of shifts, |steps| - 1
  std::size_t depth = 0;   // deepest RefinedShifting recursion
  std::size_t budget_used = 0;
};

inline constexpr std::size_t kDefaultShiftBudget = 1'000'000;

/// Step budget of a shifting procedure ran out; carries the steps emitted so far.
class ShiftBudgetExceeded : public BudgetExceeded {
 public:
  ShiftBudgetExceeded(ShiftSequence partial, std::size_t used)
      : BudgetExceeded("shift budget exceeded after " + std::to_string(used) + " steps", used),
        partial_(std::move(partial)) {}
  const ShiftSequence& partial() const noexcept { return partial_; }

 private:
  ShiftSequence partial_;
};

/// Every walk reachable from `w` by one t-shift, canonicalized and sorted.
/// A length-0 walk (u) shifts to (v) when the one-edge walk u-v is a t-walk.
inline std::vector<Walk> shifts_of(const MultiGraph& g, const Walk& w, WalkKind t) {
  require_kind(g, w, t);
  std::set<Walk> out;
  const std::size_t len = w.length();
  for (const Walk& o : {w, reversed(w)}) {
    for (const Incidence& inc : g.incident(o.back())) {
      Walk uni = o;
      uni.extend(inc.edge, inc.other);
      if (!detail::classify_unchecked(g, uni, t, nullptr)) continue;
      out.insert(canonical(subwalk(uni, 1, len)));
    }
    if (len == 0) break;
  }
  return {out.begin(), out.end()};
}

/// Whether `a` and `b` are t-shifts of each other.
inline bool are_shifts(const MultiGraph& g, const Walk& a, const Walk& b, WalkKind t) {
  if (a.length() != b.length()) return false;
  validate_walk(g, a);
  validate_walk(g, b);
  const std::size_t len = a.length();
  for (const Walk& oa : {a, reversed(a)}) {
    for (const Walk& ob : {b, reversed(b)}) {
      if (len > 0 && subwalk(oa, 1, len - 1) != subwalk(ob, 0, len - 1)) continue;
      // union = oa followed by ob's last step
      for (const Incidence& inc : g.incident(oa.back())) {
        if (inc.other != ob.back()) continue;
        if (len > 0 && inc.edge != ob.edges.back()) continue;
        Walk uni = oa;
        uni.extend(inc.edge, inc.other);
        if (detail::classify_unchecked(g, uni, t, nullptr)) return true;
      }
    }
  }
  return false;
}

/// Breadth-first search over canonical t-walks of `from`'s length for a
/// shortest shift sequence ending in a walk satisfying `target`. The first
/// step is `from` as given; later steps are canonical.
inline std::optional<ShiftSequence> shift_reachable(
    const MultiGraph& g, const Walk& from, WalkKind t,
    const std::function<bool(const Walk&)>& target, std::size_t max_states = kDefaultShiftBudget) {
  require_kind(g, from, t);
  if (target(from)) return ShiftSequence{t, {from}};
  const Walk start = canonical(from);
  std::map<Walk, Walk> parent{{start, start}};
  std::deque<Walk> queue{start};
  while (!queue.empty()) {
    Walk cur = std::move(queue.front());
    queue.pop_front();
    for (Walk& next : shifts_of(g, cur, t)) {
      if (parent.count(next)) continue;
      parent.emplace(next, cur);
      if (parent.size() > max_states)
        throw BudgetExceeded("shift_reachable explored more than " + std::to_string(max_states) +
                                 " walks",
                             parent.size());
      if (target(next)) {
        std::vector<Walk> rev{next};
        for (Walk at = cur; at != start; at = parent.at(at)) rev.push_back(at);
        rev.push_back(from);
        return ShiftSequence{t, {rev.rbegin(), rev.rend()}};
      }
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

/// Canonical members of the shift-equivalence class of `from`.
inline std::set<Walk> shift_class(const MultiGraph& g, const Walk& from, WalkKind t,
                                  std::size_t max_states = kDefaultShiftBudget) {
  require_kind(g, from, t);
  std::set<Walk> seen{canonical(from)};
  std::deque<Walk> queue{canonical(from)};
  while (!queue.empty()) {
    Walk cur = std::move(queue.front());
    queue.pop_front();
    for (Walk& next : shifts_of(g, cur, t)) {
      if (!seen.insert(next).second) continue;
      if (seen.size() > max_states)
        throw BudgetExceeded("shift class larger than " + std::to_string(max_states), seen.size());
      queue.push_back(std::move(next));
    }
  }
  return seen;
}

namespace detail {

using Path = std::vector<VertexId>;

inline bool is_induced_path(const MultiGraph& g, const Path& p) {
  return all_distinct(p) && path_is_induced(g, p);
}

// Lexicographically least (x, y) such that x p y is an induced path, with x
// attached to p's first vertex.
inline std::optional<std::pair<VertexId, VertexId>> least_extension(const MultiGraph& g,
                                                                    const Path& p) {
  for (VertexId x : g.neighbors(p.front())) {
    for (VertexId y : g.neighbors(p.back())) {
      Path cand{x};
      cand.insert(cand.end(), p.begin(), p.end());
      cand.push_back(y);
      if (is_induced_path(g, cand)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

// Induced and refined shifting on vertex sequences; graphs shrink by deletion and
// contraction while ids stay those of the host.
class InducedShifter {
 public:
  InducedShifter(const MultiGraph& host, std::size_t budget) : host_(host), budget_(budget) {}

  void shifting(const Path& p) {
    emit(p);
    if (auto ext = least_extension(host_, p)) {
      Path q{ext->second};
      q.insert(q.end(), p.rbegin(), p.rend());
      q.push_back(ext->first);
      refined(host_, q, 1);
    }
  }

  void refined(const MultiGraph& g, const Path& p, std::size_t depth) {
    depth_ = std::max(depth_, depth);
    const std::size_t k = p.size() - 2;
    const VertexId last = p.back();
    const Path head(p.begin(), p.begin() + k);
    emit(head);

    MultiGraph h = delete_closed_neighborhood(g, last);
    if (auto ext = least_extension(h, head)) {
      Path next{ext->first};
      next.insert(next.end(), head.begin(), head.end());
      next.push_back(ext->second);
      refined(h, next, depth + 1);
    }

    const Path q = steps_.back();
    // one-sided extensions x q y with y the only end adjacent to `last`
    std::optional<std::tuple<VertexId, VertexId, Path>> best;
    for (const Path& o : {q, Path(q.rbegin(), q.rend())}) {
      for (VertexId x : g.neighbors(o.front())) {
        if (g.adjacent(x, last)) continue;
        for (VertexId y : g.neighbors(o.back())) {
          if (!g.adjacent(y, last)) continue;
          Path cand{x};
          cand.insert(cand.end(), o.begin(), o.end());
          cand.push_back(y);
          if (!is_induced_path(g, cand)) continue;
          if (!best || std::make_pair(x, y) < std::make_pair(std::get<0>(*best), std::get<1>(*best)))
            best.emplace(x, y, o);
          break;
        }
      }
    }
    if (!best) return;
    auto [x, y, o] = *best;
    Path next{x};
    next.insert(next.end(), o.begin(), o.end());
    const VertexId merged = g.next_vertex_id();
    MultiGraph contracted = contract_edge(g, *g.edge_between(last, y), merged);
    next.push_back(merged);
    refined(contracted, next, depth + 1);
  }

  ShiftSequence result() const {
    ShiftSequence s{WalkKind::ind, {}};
    for (const Path& p : steps_) s.steps.push_back(walk_through(host_, p));
    return s;
  }

  std::size_t depth() const { return depth_; }

 private:
  void emit(const Path& p) {
    if (steps_.size() >= budget_) throw ShiftBudgetExceeded(result(), steps_.size());
    steps_.push_back(p);
  }

  const MultiGraph& host_;
  std::size_t budget_;
  std::size_t depth_ = 0;
  std::vector<Path> steps_;
};

inline void fill_stats(ShiftStats* stats, const ShiftSequence& s, std::size_t depth) {
  if (!stats) return;
  stats->length = s.shifts();
  stats->depth = depth;
  stats->budget_used = s.steps.size();
}

}  // namespace detail

/// Shifts an induced path to an ind-avoidable one.
inline ShiftSequence shifting_induced(const MultiGraph& g, const Walk& p,
                                      ShiftStats* stats = nullptr,
                                      std::size_t budget = kDefaultShiftBudget) {
  require_kind(g, p, WalkKind::ind);
  detail::InducedShifter sh(g, budget);
  sh.shifting(p.vertices);
  ShiftSequence s = sh.result();
  s.steps.front() = p;
  detail::fill_stats(stats, s, sh.depth());
  return s;
}

/// On p = p_1 ... p_{k+2}: shifts p_1 ... p_k inside g - N[p_{k+2}]
/// to a path avoidable in g.
inline ShiftSequence refined_shifting(const MultiGraph& g, const Walk& p,
                                      ShiftStats* stats = nullptr,
                                      std::size_t budget = kDefaultShiftBudget) {
  require_kind(g, p, WalkKind::ind);
  if (p.vertices.size() < 3) throw InputError("refined_shifting needs at least three vertices");
  detail::InducedShifter sh(g, budget);
  sh.refined(g, p.vertices, 1);
  ShiftSequence s = sh.result();
  s.steps.front() = subwalk(p, 0, p.length() - 2);
  detail::fill_stats(stats, s, sh.depth());
  return s;
}

namespace detail {

// Appends the length-`len` windows of `r` starting at offset `from`.
inline void append_windows(ShiftSequence& s, const Walk& r, std::size_t len, std::size_t from) {
  for (std::size_t i = from; i + len <= r.length(); ++i) s.steps.push_back(subwalk(r, i, len));
}

inline Walk concat(const Walk& a, const Walk& b) {
  if (a.back() != b.front()) throw std::logic_error("concatenated walks do not meet");
  Walk out = a;
  for (std::size_t i = 0; i < b.length(); ++i) out.extend(b.edges[i], b.vertices[i + 1]);
  return out;
}

class TreeLongest {
 public:
  explicit TreeLongest(const DfsTree& t) : t_(t) {
    std::vector<std::pair<std::size_t, VertexId>> order;
    for (auto [v, r] : t.discovery) order.emplace_back(r, v);
    std::sort(order.rbegin(), order.rend());
    for (auto [r, v] : order) {
      std::size_t h = 0;
      for (VertexId c : t.children.at(v)) h = std::max(h, height_.at(c) + 1);
      height_[v] = h;
    }
  }

  // Longest downward tree walk from v; ties go to the smallest child id,
  // which yields the lexicographically least vertex sequence.
  Walk from(VertexId v, std::optional<VertexId> skip = std::nullopt) const {
    Walk w = Walk::at(v);
    for (bool first = true;; first = false) {
      std::optional<VertexId> pick;
      for (VertexId c : t_.children.at(w.back())) {
        if (first && skip && c == *skip) continue;
        if (!pick || height_.at(c) > height_.at(*pick) ||
            (height_.at(c) == height_.at(*pick) && c < *pick))
          pick = c;
      }
      if (!pick) return w;
      w.extend(t_.parent.at(*pick).second, *pick);
    }
  }

 private:
  const DfsTree& t_;
  std::map<VertexId, std::size_t> height_;
};

}  // namespace detail

namespace detail {

// One pass of DFS path shifting from `p`.
inline ShiftSequence path_shifting_round(const MultiGraph& g, const Walk& p) {
  const std::size_t len = p.length();
  const DfsTree tree = dfs_tree(g, p);
  const TreeLongest longest(tree);

  ShiftSequence s{WalkKind::pth, {}};
  const Walk q = concat(p, longest.from(p.back()));
  append_windows(s, q, len, 0);
  const Walk p1 = s.back();

  // the longest branch at p1's first vertex that leaves p1
  std::optional<VertexId> skip;
  if (len > 0) skip = p1.vertices[1];
  const Walk q1 = longest.from(p1.front(), skip);
  if (q1.length() > len) append_windows(s, concat(reversed(p1), q1), len, 1);
  const Walk p2 = s.back();

  SearchBudget budget;
  auto ext = non_closable_extension(g, p2, WalkKind::pth, Mode::fast, budget);
  if (!ext) return s;
  const VertexId x = ext->prefix_vertex;
  if (!tree.is_ancestor(p2.front(), x) || x == p2.front())
    throw std::logic_error("non-closable extension of " + to_string(p2) +
                           " does not enter a subtree below its first vertex");
  Walk q3 = Walk::at(p2.front());
  q3.extend(ext->prefix_edge, x);
  q3 = concat(q3, longest.from(x));
  append_windows(s, concat(reversed(p2), q3), len, 1);
  return s;
}

}  // namespace detail

/// Shifts a path to a pth-avoidable one using a DFS tree whose
/// first branch is the path. When the extension found in the last phase
/// meets its first vertex through a back edge from deeper in the tree, the
/// end path can still have a non-closable extension; the pass is then
/// repeated from the end path with a fresh DFS tree.
inline ShiftSequence path_shifting_dfs(const MultiGraph& g, const Walk& p,
                                       ShiftStats* stats = nullptr,
                                       std::size_t budget = kDefaultShiftBudget) {
  require_kind(g, p, WalkKind::pth);
  ShiftSequence s = detail::path_shifting_round(g, p);
  std::set<Walk> starts{canonical(p)};
  std::size_t rounds = 1;
  while (!is_avoidable(g, s.back(), WalkKind::pth)) {
    if (!starts.insert(canonical(s.back())).second)
      throw std::logic_error("path shifting revisits " + to_string(s.back()));
    if (s.steps.size() >= budget) throw ShiftBudgetExceeded(s, s.steps.size());
    ShiftSequence more = detail::path_shifting_round(g, s.back());
    s.steps.insert(s.steps.end(), more.steps.begin() + 1, more.steps.end());
    ++rounds;
  }
  detail::fill_stats(stats, s, rounds);
  return s;
}

/// Path shifting through the line graph: the edge sequence of `p` is an
/// induced path there, shifting_induced moves it, and each step is pulled back
/// to a path of `g`. Requires a simple graph; length 0 walks down a DFS
/// tree to a leaf instead.
inline ShiftSequence path_shifting_via_line_graph(const MultiGraph& g, const Walk& p,
                                                  ShiftStats* stats = nullptr,
                                                  std::size_t budget = kDefaultShiftBudget) {
  require_kind(g, p, WalkKind::pth);
  ShiftSequence s{WalkKind::pth, {}};
  if (p.length() == 0) {
    const DfsTree tree = dfs_tree(g, p);
    std::optional<VertexId> leaf;
    for (const auto& [v, kids] : tree.children)
      if (kids.empty() && v != tree.root && (!leaf || v < *leaf)) leaf = v;
    if (!leaf) return ShiftSequence{WalkKind::pth, {p}};
    auto up = tree.path_to_root(*leaf);
    for (auto it = up.rbegin(); it != up.rend(); ++it) s.steps.push_back(Walk::at(*it));
    detail::fill_stats(stats, s, 0);
    return s;
  }
  if (!g.is_simple())
    throw InputError("line-graph path shifting requires a graph without loops or parallel edges");

  const LineGraph lg = line_graph(g);
  std::vector<VertexId> image;
  for (EdgeId e : p.edges) image.push_back(lg.vertex_of.at(e));
  ShiftStats inner;
  const ShiftSequence in_line =
      shifting_induced(lg.graph, walk_through(lg.graph, image), &inner, budget);

  for (const Walk& step : in_line.steps) {
    std::vector<EdgeId> es;
    for (VertexId x : step.vertices) es.push_back(lg.origin.at(x));
    auto [a, b] = g.endpoints(es.front());
    VertexId start = a;
    if (es.size() >= 2) {
      auto [c, d] = g.endpoints(es[1]);
      start = (a == c || a == d) ? b : a;
    }
    Walk w = Walk::at(start);
    for (EdgeId e : es) w.extend(e, g.other_end(e, w.back()));
    if (!classify(g, w, WalkKind::pth))
      throw std::logic_error("line-graph step " + to_string(step) + " does not pull back to a path");
    s.steps.push_back(std::move(w));
  }
  if (canonical(s.steps.front()) != canonical(p))
    throw std::logic_error("line-graph pull-back does not start at the input path");
  s.steps.front() = p;
  detail::fill_stats(stats, s, inner.depth);
  return s;
}

/// Window slide along from . W'' . to, where W'' is a shortest connecting walk.
inline ShiftSequence walk_shifting(const MultiGraph& g, const Walk& from, const Walk& to) {
  validate_walk(g, from);
  validate_walk(g, to);
  if (from.length() != to.length()) throw InputError("walks have different lengths");
  if (from == to) return ShiftSequence{WalkKind::wlk, {from}};

  std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
  std::deque<VertexId> queue{from.back()};
  std::set<VertexId> seen{from.back()};
  while (!queue.empty() && !seen.count(to.front())) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const Incidence& inc : g.incident(v))
      if (seen.insert(inc.other).second) {
        parent[inc.other] = {v, inc.edge};
        queue.push_back(inc.other);
      }
  }
  if (!seen.count(to.front())) throw InputError("walks lie in different components");
  std::vector<std::pair<EdgeId, VertexId>> hops;
  for (VertexId v = to.front(); v != from.back(); v = parent.at(v).first)
    hops.emplace_back(parent.at(v).second, v);
  Walk link = Walk::at(from.back());
  for (auto it = hops.rbegin(); it != hops.rend(); ++it) link.extend(it->first, it->second);

  ShiftSequence s{WalkKind::wlk, {}};
  detail::append_windows(s, detail::concat(detail::concat(from, link), to), from.length(), 0);
  return s;
}

/// Checks every ShiftSequence invariant; optionally also that the last step
/// is avoidable (oracle mode).
inline VerificationReport verify_shift_sequence(const MultiGraph& g, const ShiftSequence& s,
                                                bool require_avoidable_end) {
  Stopwatch clock;
  VerificationReport r;
  r.claim = "shift-sequence";
  r.instance = std::string(to_string(s.kind)) + ", " + std::to_string(s.steps.size()) + " steps";
  auto fail = [&](std::size_t i, std::string why) {
    r.passed = false;
    r.failed_index = i;
    r.detail = std::move(why);
    if (i < s.steps.size()) r.witness.push_back(s.steps[i]);
    r.seconds = clock.seconds();
    return r;
  };
  if (s.steps.empty()) return fail(0, "empty sequence");
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const Walk& w = s.steps[i];
    try {
      if (w.length() != s.steps.front().length()) return fail(i, "length differs from step 0");
      if (!classify(g, w, s.kind)) return fail(i, "step is not of the sequence's kind");
      if (i > 0 && !are_shifts(g, s.steps[i - 1], w, s.kind))
        return fail(i, "step is not a shift of its predecessor");
    } catch (const InputError& e) {
      return fail(i, e.what());
    }
  }
  if (require_avoidable_end) {
    SearchBudget budget;
    if (!is_avoidable(g, s.back(), s.kind, Mode::oracle, budget))
      return fail(s.steps.size() - 1, "last step is not avoidable");
    r.budget_used = budget.used();
  }
  r.passed = true;
  r.seconds = clock.seconds();
  return r;
}

/// For every induced path with k vertices in g - N[v], a shortest shift
/// sequence inside g - N[v] to a path avoidable in g (nullopt when none).
inline std::vector<std::pair<Walk, std::optional<ShiftSequence>>> hr_witnesses(
    const MultiGraph& g, std::size_t k, VertexId v) {
  if (k == 0) throw InputError("k must be positive");
  g.require_vertex(v);
  const MultiGraph h = delete_closed_neighborhood(g, v);
  std::map<Walk, bool> avoidable;
  auto target = [&](const Walk& w) {
    Walk c = canonical(w);
    auto it = avoidable.find(c);
    if (it == avoidable.end())
      it = avoidable.emplace(c, is_avoidable(g, c, WalkKind::ind, Mode::oracle)).first;
    return it->second;
  };
  std::vector<std::pair<Walk, std::optional<ShiftSequence>>> out;
  for (const Walk& w : enumerate_walks(h, WalkKind::ind, k - 1))
    out.emplace_back(w, shift_reachable(h, w, WalkKind::ind, target));
  return out;
}

/// Brute-force test of the property that every induced path with k vertices
/// in g - N[v] shifts inside g - N[v] to a path avoidable in g.
inline bool check_hr(const MultiGraph& g, std::size_t k, VertexId v) {
  for (const auto& [w, seq] : hr_witnesses(g, k, v))
    if (!seq) return false;
  return true;
}

}  // namespace avoidable
