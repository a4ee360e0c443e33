#pragma once

// Verification suites for the counterexample families and the shifting
// theorems, shared by the CLI's verify-paper command and the acceptance test.

#include <functional>
#include <string>
#include <vector>

#include "avoidable/corpus.hpp"
#include "avoidable/families.hpp"
#include "avoidable/shifting.hpp"

namespace avoidable {

struct SuiteOptions {
  std::size_t max_vertices = 7;
  std::size_t random_count = 200;
  std::uint64_t seed = kDefaultCorpusSeed;
  std::size_t max_length = 3;         // walk lengths for the shifting suites
  std::size_t oracle_max_length = 4;  // walk lengths for fast/oracle agreement
};

namespace detail {

// Collects per-instance outcomes into one report, keeping the first failure.
class Tally {
 public:
  explicit Tally(std::string claim) { report_.claim = std::move(claim); }

  void pass() { ++checked_; }

  void fail(const std::string& instance, const std::string& why, std::vector<Walk> witness = {}) {
    ++checked_;
    if (failed_++ == 0) {
      report_.detail = instance + ": " + why;
      report_.witness = std::move(witness);
    }
  }

  void check(bool ok, const std::string& instance, const std::string& why,
             std::vector<Walk> witness = {}) {
    ok ? pass() : fail(instance, why, std::move(witness));
  }

  std::size_t failed() const { return failed_; }

  VerificationReport finish(std::string instance) {
    report_.instance = std::move(instance);
    report_.passed = failed_ == 0;
    const std::string counts =
        std::to_string(checked_) + " checks, " + std::to_string(failed_) + " failed";
    report_.detail = report_.detail.empty() ? counts : counts + "; first: " + report_.detail;
    report_.seconds = clock_.seconds();
    return report_;
  }

 private:
  VerificationReport report_;
  Stopwatch clock_;
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
};

inline std::vector<Walk> both_orientations(const Walk& w) {
  if (w.length() == 0) return {w};
  return {w, reversed(w)};
}

inline std::string describe(const CorpusGraph& c, const Walk& w) {
  return c.name + " walk " + to_string(w);
}

// Edge sequence of a line-graph walk pulled back to a walk of g: consecutive
// edges must share an endpoint. Returns nullopt when they do not.
inline std::optional<Walk> pull_back(const MultiGraph& g, const LineGraph& lg, const Walk& w,
                                     bool closed) {
  std::vector<EdgeId> es;
  for (std::size_t i = 0; i < (closed ? w.length() : w.vertices.size()); ++i)
    es.push_back(lg.origin.at(w.vertices[i]));
  auto shared = [&](EdgeId a, EdgeId b) -> std::optional<VertexId> {
    auto [p, q] = g.endpoints(a);
    auto [r, s] = g.endpoints(b);
    if (p == r || p == s) return p;
    if (q == r || q == s) return q;
    return std::nullopt;
  };
  VertexId start = g.endpoints(es.front()).first;
  if (es.size() >= 2) {
    auto first_shared = shared(es[0], es[1]);
    if (!first_shared) return std::nullopt;
    start = g.other_end(es[0], *first_shared);
    if (closed && !shared(es.back(), es.front())) return std::nullopt;
  }
  Walk out = Walk::at(start);
  for (EdgeId e : es) {
    auto [a, b] = g.endpoints(e);
    if (a != out.back() && b != out.back()) return std::nullopt;
    out.extend(e, g.other_end(e, out.back()));
  }
  return out;
}

}  // namespace detail

/// Trail counterexamples: loop pair, dipoles, K4 and K_{2,3}.
inline std::vector<VerificationReport> suite_trails() {
  std::vector<VerificationReport> out;
  auto timed = [&](VerificationReport r) {
    if (r.passed && r.seconds >= 1.0) {
      r.passed = false;
      r.detail += "; took " + std::to_string(r.seconds) + " s";
    }
    out.push_back(std::move(r));
  };

  {
    Stopwatch clock;
    const MultiGraph g = loop_pair();
    VerificationReport r = verify_no_avoidable(g, WalkKind::trl, 0, "S2.loop-pair.trail0");
    for (const Walk& w : enumerate_walks(g, WalkKind::trl, 0)) {
      const std::size_t n = extensions(g, w, WalkKind::trl).size();
      if (n != 1 && r.passed) {
        r.passed = false;
        r.witness = {w};
        r.detail = "expected a unique extension, found " + std::to_string(n);
      }
    }
    r.seconds = clock.seconds();
    timed(std::move(r));
  }

  for (std::size_t len : {1, 3, 5}) {
    Stopwatch clock;
    const MultiGraph g = dipole(len + 2);
    VerificationReport r = verify_no_avoidable(g, WalkKind::trl, len,
                                               "S2.dipole" + std::to_string(len + 2) + ".trail" +
                                                   std::to_string(len));
    const std::size_t orbits = count_up_to_symmetry(g, enumerate_walks(g, WalkKind::trl, len));
    if (orbits != 1 && r.passed) {
      r.passed = false;
      r.detail = std::to_string(orbits) + " trails up to symmetry, expected 1";
    }
    r.seconds = clock.seconds();
    timed(std::move(r));
  }

  {
    Stopwatch clock;
    const MultiGraph g = complete(4);
    VerificationReport r = verify_no_avoidable(g, WalkKind::trl, 2, "S2.K4.trail2");
    const auto trails = enumerate_walks(g, WalkKind::trl, 2);
    const std::size_t orbits = count_up_to_symmetry(g, trails);
    for (const Walk& w : trails) {
      const auto exts = extensions(g, w, WalkKind::trl);
      std::size_t open = 0;
      for (const Extension& e : exts) open += !is_closable(g, e.extended, WalkKind::trl, Mode::oracle);
      if ((exts.size() != 3 || open != 2) && r.passed) {
        r.passed = false;
        r.witness = {w};
        r.detail = std::to_string(exts.size()) + " extensions, " + std::to_string(open) +
                   " non-closable; expected 3 and 2";
      }
    }
    if (orbits != 1 && r.passed) {
      r.passed = false;
      r.detail = std::to_string(orbits) + " trails up to symmetry, expected 1";
    }
    if (r.passed) r.detail += "; each trail has 3 extensions, 2 non-closable";
    r.seconds = clock.seconds();
    timed(std::move(r));
  }

  {
    Stopwatch clock;
    const MultiGraph g = complete_bipartite(2, 3);
    VerificationReport r = verify_no_avoidable(g, WalkKind::trl, 3, "S2.K2,3.trail3");
    const auto trails = enumerate_walks(g, WalkKind::trl, 3);
    for (const Walk& w : trails) {
      const std::size_t n = extensions(g, w, WalkKind::trl).size();
      if (n != 1 && r.passed) {
        r.passed = false;
        r.witness = {w};
        r.detail = "expected a unique extension, found " + std::to_string(n);
      }
    }
    const std::size_t orbits = count_up_to_symmetry(g, trails);
    if (orbits != 1 && r.passed) {
      r.passed = false;
      r.detail = std::to_string(orbits) + " trails up to symmetry, expected 1";
    }
    r.seconds = clock.seconds();
    timed(std::move(r));
  }
  return out;
}

/// Isometric-path counterexamples: W6, P3 x P3 and P7 x C7.
inline std::vector<VerificationReport> suite_isometric() {
  std::vector<VerificationReport> out;
  const MultiGraph w6 = wheel(6);
  out.push_back(verify_no_avoidable(w6, WalkKind::iso, 0, "S3.W6.iso0"));
  {
    detail::Tally t("S3.W6.iso2-not-closable");
    for (const Walk& w : enumerate_walks(w6, WalkKind::iso, 2))
      t.check(!is_closable(w6, w, WalkKind::iso, Mode::oracle), "W6", "isometric path closes", {w});
    out.push_back(t.finish("W6, isometric paths of length 2"));
  }
  out.push_back(verify_no_avoidable(grid_product(3, 3), WalkKind::iso, 1, "S3.P3xP3.iso1"));
  out.push_back(verify_no_avoidable(iso_counterexample(1), WalkKind::iso, 1, "S3.P7xC7.iso1"));
  return out;
}

/// Coordinate characterization of short isometric paths and the
/// isometric-cycle census of P7 x C7.
inline std::vector<VerificationReport> suite_claims() {
  std::vector<VerificationReport> out;
  const MultiGraph g = torus_strip(7);
  const Distances dist(g);
  detail::Tally t("S3.claim1");
  for (std::size_t len = 0; len <= 3; ++len)
    for (const Walk& w : enumerate_walks(g, WalkKind::pth, len))
      t.check(claim1_characterization(g, w, 1) == classify(g, w, WalkKind::iso, &dist), "P7xC7",
              "coordinate condition disagrees with isometry", {w});
  out.push_back(t.finish("P7xC7, paths of length <= 3"));
  VerificationReport census = claim2_isometric_cycles(7);
  census.claim = "S3.claim2";
  out.push_back(std::move(census));
  return out;
}

/// shifting_induced on every induced path of length <= max_length, both
/// orientations, over the corpus.
inline VerificationReport suite_induced(const std::vector<CorpusGraph>& corpus,
                                        const SuiteOptions& opt = {}) {
  detail::Tally t("S4.induced-shifting");
  for (const CorpusGraph& c : corpus)
    for (std::size_t len = 0; len <= opt.max_length; ++len)
      for (const Walk& base : enumerate_walks(c.graph, WalkKind::ind, len))
        for (const Walk& w : detail::both_orientations(base)) {
          try {
            const ShiftSequence s = shifting_induced(c.graph, w);
            if (s.steps.front() != w) {
              t.fail(detail::describe(c, w), "sequence does not start at the input", {w});
              continue;
            }
            VerificationReport r = verify_shift_sequence(c.graph, s, true);
            t.check(r.passed, detail::describe(c, w), r.detail, r.witness);
          } catch (const std::exception& e) {
            t.fail(detail::describe(c, w), e.what(), {w});
          }
        }
  return t.finish(std::to_string(corpus.size()) + " graphs, induced paths of length <= " +
                  std::to_string(opt.max_length));
}

/// Both path-shifting routes on every path of length <= max_length. The
/// line-graph route runs on simple graphs only, and on length 0 everywhere.
inline VerificationReport suite_paths(const std::vector<CorpusGraph>& corpus,
                                      const SuiteOptions& opt = {}) {
  detail::Tally t("S5.path-shifting");
  for (const CorpusGraph& c : corpus)
    for (std::size_t len = 0; len <= opt.max_length; ++len)
      for (const Walk& base : enumerate_walks(c.graph, WalkKind::pth, len))
        for (const Walk& w : detail::both_orientations(base)) {
          const int routes = c.graph.is_simple() || len == 0 ? 2 : 1;
          for (int route = 0; route < routes; ++route) {
            const std::string name = detail::describe(c, w) + (route ? " (line graph)" : " (dfs)");
            try {
              const ShiftSequence s = route ? path_shifting_via_line_graph(c.graph, w)
                                            : path_shifting_dfs(c.graph, w);
              if (s.steps.front() != w) {
                t.fail(name, "sequence does not start at the input", {w});
                continue;
              }
              VerificationReport r = verify_shift_sequence(c.graph, s, true);
              t.check(r.passed, name, r.detail, r.witness);
            } catch (const std::exception& e) {
              t.fail(name, e.what(), {w});
            }
          }
        }
  return t.finish(std::to_string(corpus.size()) + " graphs, paths of length <= " +
                  std::to_string(opt.max_length) + ", dfs and line-graph routes");
}

/// Structural line-graph facts: path edge sequences are induced paths,
/// induced paths and induced cycles (length >= 4) pull back to paths and
/// cycles, avoidability and shifts transfer back.
inline VerificationReport suite_line_graph(const std::vector<CorpusGraph>& corpus,
                                           const SuiteOptions& opt = {}) {
  detail::Tally t("S5.line-graph-lemma");
  for (const CorpusGraph& c : corpus) {
    const MultiGraph& g = c.graph;
    const LineGraph lg = line_graph(g);
    const MultiGraph& l = lg.graph;
    // (a)
    for (std::size_t len = 1; len <= opt.max_length + 1; ++len)
      for (const Walk& p : enumerate_walks(g, WalkKind::pth, len)) {
        std::vector<VertexId> image;
        for (EdgeId e : p.edges) image.push_back(lg.vertex_of.at(e));
        const Walk q = walk_through(l, image);
        t.check(classify(l, q, WalkKind::ind) && q.length() + 1 == len, detail::describe(c, p),
                "edge sequence is not an induced path of the line graph", {p});
      }
    // (b)
    for (std::size_t len = 4; len <= l.vertex_count(); ++len)
      for (const Walk& cyc : enumerate_walks(l, WalkKind::ind, len, true)) {
        auto back = detail::pull_back(g, lg, cyc, true);
        t.check(back && is_closed(*back) && classify_closed(g, *back, WalkKind::pth),
                c.name + " line-graph cycle " + to_string(cyc), "does not pull back to a cycle");
      }
    // (c), (d), (e)
    for (std::size_t len = 0; len + 1 <= opt.max_length; ++len)
      for (const Walk& p : enumerate_walks(l, WalkKind::ind, len)) {
        auto back = detail::pull_back(g, lg, p, false);
        const std::string name = c.name + " line-graph path " + to_string(p);
        if (!back || !classify(g, *back, WalkKind::pth) || back->length() != len + 1) {
          t.fail(name, "does not pull back to a path");
          continue;
        }
        t.pass();
        if (is_avoidable(l, p, WalkKind::ind, Mode::oracle))
          t.check(is_avoidable(g, *back, WalkKind::pth, Mode::oracle), name,
                  "avoidable in the line graph but its pull-back is not", {*back});
        for (const Walk& q : shifts_of(l, p, WalkKind::ind)) {
          auto qb = detail::pull_back(g, lg, q, false);
          t.check(qb && are_shifts(g, *back, *qb, WalkKind::pth), name,
                  "shift to " + to_string(q) + " does not pull back to a shift", {*back});
        }
      }
  }
  return t.finish(std::to_string(corpus.size()) + " graphs and their line graphs");
}

/// Walk observations: every walk is avoidable, all same-length walks of a
/// connected graph form one shift class, and the window slide validates.
inline VerificationReport suite_walks(const std::vector<CorpusGraph>& corpus,
                                      const SuiteOptions& opt = {}) {
  detail::Tally t("S6.walks");
  for (const CorpusGraph& c : corpus) {
    const MultiGraph& g = c.graph;
    for (std::size_t len = 0; len <= opt.max_length; ++len) {
      const auto walks = enumerate_walks(g, WalkKind::wlk, len);
      for (const Walk& w : walks)
        t.check(is_avoidable(g, w, WalkKind::wlk, Mode::oracle), detail::describe(c, w),
                "walk is not avoidable", {w});
      if (walks.empty() || !is_connected(g)) continue;
      const auto cls = shift_class(g, walks.front(), WalkKind::wlk);
      t.check(cls.size() == walks.size(), c.name + " length " + std::to_string(len),
              std::to_string(cls.size()) + " of " + std::to_string(walks.size()) +
                  " walks reachable",
              {walks.front()});
      const Walk& last = walks.back();
      auto seq = shift_reachable(g, walks.front(), WalkKind::wlk,
                                 [&](const Walk& w) { return canonical(w) == last; });
      t.check(seq && verify_shift_sequence(g, *seq, false).passed, c.name,
              "shift_reachable failed between first and last walk", {walks.front(), last});
      for (const Walk& w : walks) {
        const ShiftSequence s = walk_shifting(g, walks.front(), w);
        VerificationReport r = verify_shift_sequence(g, s, false);
        t.check(r.passed && s.steps.front() == walks.front() && s.back() == w,
                detail::describe(c, w), "window slide invalid: " + r.detail, r.witness);
      }
    }
  }
  return t.finish(std::to_string(corpus.size()) + " graphs, walks of length <= " +
                  std::to_string(opt.max_length));
}

/// Fast and oracle closability agree on every t-walk of length <= oracle_max_length.
inline VerificationReport suite_oracle(const std::vector<CorpusGraph>& corpus,
                                       const SuiteOptions& opt = {}) {
  detail::Tally t("S7.fast-vs-oracle");
  for (const CorpusGraph& c : corpus)
    for (WalkKind k : kAllKinds)
      for (std::size_t len = 0; len <= opt.oracle_max_length; ++len)
        for_each_walk(c.graph, k, len, false, [&](const Walk& w) {
          const bool fast = is_closable(c.graph, w, k, Mode::fast);
          const bool slow = is_closable(c.graph, w, k, Mode::oracle);
          t.check(fast == slow, detail::describe(c, w) + " " + std::string(to_string(k)),
                  std::string("fast says ") + (fast ? "closable" : "not closable"), {w});
        });
  return t.finish(std::to_string(corpus.size()) + " graphs, all kinds, length <= " +
                  std::to_string(opt.oracle_max_length));
}

/// Brute-force Hr(g, k, v) for k <= max_length and every v, plus replay of
/// each witness sequence in the full graph.
inline VerificationReport suite_lemmas(const std::vector<CorpusGraph>& corpus,
                                       const SuiteOptions& opt = {}) {
  detail::Tally t("S8.lemmas");
  for (const CorpusGraph& c : corpus)
    for (std::size_t k = 1; k <= opt.max_length; ++k)
      for (VertexId v : c.graph.vertices())
        for (const auto& [w, seq] : hr_witnesses(c.graph, k, v)) {
          const std::string name =
              c.name + " v=" + std::to_string(v.value) + " k=" + std::to_string(k) + " " +
              to_string(w);
          if (!seq) {
            t.fail(name, "no shift to a path avoidable in g", {w});
            continue;
          }
          t.pass();
          VerificationReport r = verify_shift_sequence(c.graph, *seq, true);
          t.check(r.passed, name, "sequence does not replay in g: " + r.detail, r.witness);
        }
  return t.finish(std::to_string(corpus.size()) + " graphs, k <= " +
                  std::to_string(opt.max_length));
}

struct CorpusShiftStats {
  std::size_t runs = 0;
  std::size_t max_length = 0;
  double mean_length = 0.0;
  std::size_t max_depth = 0;
  double mean_depth = 0.0;
  std::size_t budget_errors = 0;
  std::size_t path_runs = 0;
  std::size_t path_max_length = 0;
  double path_mean_length = 0.0;
};

/// Sequence-length and recursion-depth statistics of the shifting
/// procedures over the corpus.
inline CorpusShiftStats shift_statistics(const std::vector<CorpusGraph>& corpus,
                                         const SuiteOptions& opt = {},
                                         std::size_t budget = kDefaultShiftBudget) {
  CorpusShiftStats st;
  double sum = 0, depth_sum = 0, path_sum = 0;
  for (const CorpusGraph& c : corpus)
    for (std::size_t len = 0; len <= opt.max_length; ++len) {
      for (const Walk& base : enumerate_walks(c.graph, WalkKind::ind, len))
        for (const Walk& w : detail::both_orientations(base)) {
          ShiftStats s;
          try {
            shifting_induced(c.graph, w, &s, budget);
          } catch (const BudgetExceeded&) {
            ++st.budget_errors;
            continue;
          }
          ++st.runs;
          sum += static_cast<double>(s.length);
          depth_sum += static_cast<double>(s.depth);
          st.max_length = std::max(st.max_length, s.length);
          st.max_depth = std::max(st.max_depth, s.depth);
        }
      for (const Walk& base : enumerate_walks(c.graph, WalkKind::pth, len))
        for (const Walk& w : detail::both_orientations(base)) {
          const ShiftSequence s = path_shifting_dfs(c.graph, w);
          ++st.path_runs;
          path_sum += static_cast<double>(s.shifts());
          st.path_max_length = std::max(st.path_max_length, s.shifts());
        }
    }
  if (st.runs) {
    st.mean_length = sum / static_cast<double>(st.runs);
    st.mean_depth = depth_sum / static_cast<double>(st.runs);
  }
  if (st.path_runs) st.path_mean_length = path_sum / static_cast<double>(st.path_runs);
  return st;
}

}  // namespace avoidable
