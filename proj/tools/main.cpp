// Command-line front end: graph queries, shifting, family generators and the
// verification suites.

#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>
#include <json.hpp>

#include "avoidable.hpp"

using namespace avoidable;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kClaimFailed = 1, kUsage = 2, kBudget = 3 };

struct Options {
  std::string graph_file;
  std::string type = "pth";
  std::string walk;
  std::string to;
  std::string mode = "fast";
  std::string method = "dfs";
  std::size_t budget = 0;
  std::uint64_t seed = kDefaultCorpusSeed;
  std::string suite = "all";
  std::size_t max_vertices = 7;
  bool json_lines = false;
  bool closed = false;
  std::vector<std::string> family;
};

json to_json(const VerificationReport& r) {
  json j;
  j["claim"] = r.claim;
  j["instance"] = r.instance;
  j["verdict"] = r.passed ? "pass" : "fail";
  j["witness"] = json::array();
  for (const Walk& w : r.witness) j["witness"].push_back(to_string(w));
  j["detail"] = r.detail;
  if (r.failed_index) j["failed_index"] = *r.failed_index;
  j["seconds"] = r.seconds;
  j["budget_used"] = r.budget_used;
  return j;
}

MultiGraph load_graph(const std::string& path) {
  if (path.empty()) throw InputError("missing graph file");
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_graph(text);
}

WalkKind kind_of(const Options& o) {
  auto k = parse_walk_kind(o.type);
  if (!k) throw InputError("unknown walk type '" + o.type + "'");
  return *k;
}

Mode mode_of(const Options& o) {
  if (o.mode == "fast") return Mode::fast;
  if (o.mode == "oracle") return Mode::oracle;
  throw InputError("unknown mode '" + o.mode + "'");
}

SearchBudget budget_of(const Options& o) {
  return SearchBudget(o.budget ? o.budget : SearchBudget::kDefaultLimit);
}

Walk walk_of(const MultiGraph& g, const std::string& spec) {
  if (spec.empty()) throw InputError("missing --walk");
  return parse_walk(g, spec);
}

void print_sequence(const ShiftSequence& s) {
  for (const Walk& w : s.steps) std::cout << to_string(w) << '\n';
}

int cmd_classify(const Options& o) {
  const MultiGraph g = load_graph(o.graph_file);
  const Walk w = walk_of(g, o.walk);
  const bool ok = o.closed ? classify_closed(g, w, kind_of(o)) : classify(g, w, kind_of(o));
  std::cout << (ok ? "true" : "false") << '\n';
  return kOk;
}

int cmd_extensions(const Options& o) {
  const MultiGraph g = load_graph(o.graph_file);
  for (const Extension& e : extensions(g, walk_of(g, o.walk), kind_of(o)))
    std::cout << to_string(e.extended) << '\n';
  return kOk;
}

int cmd_closable(const Options& o) {
  const MultiGraph g = load_graph(o.graph_file);
  const Walk w = walk_of(g, o.walk);
  SearchBudget budget = budget_of(o);
  if (mode_of(o) == Mode::oracle) {
    auto c = find_closing_walk(g, w, kind_of(o), budget);
    std::cout << (c ? "true" : "false") << '\n';
    if (c) std::cout << "closed walk: " << to_string(*c) << '\n';
  } else {
    std::cout << (is_closable(g, w, kind_of(o), Mode::fast, budget) ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_avoidable(const Options& o) {
  const MultiGraph g = load_graph(o.graph_file);
  SearchBudget budget = budget_of(o);
  auto ext = non_closable_extension(g, walk_of(g, o.walk), kind_of(o), mode_of(o), budget);
  std::cout << (ext ? "false" : "true") << '\n';
  if (ext) std::cout << "non-closable extension: " << to_string(ext->extended) << '\n';
  return kOk;
}

int cmd_shift(const Options& o) {
  const MultiGraph g = load_graph(o.graph_file);
  const Walk w = walk_of(g, o.walk);
  const std::size_t budget = o.budget ? o.budget : kDefaultShiftBudget;
  ShiftSequence s;
  switch (kind_of(o)) {
    case WalkKind::ind:
      s = shifting_induced(g, w, nullptr, budget);
      break;
    case WalkKind::pth:
      if (o.method == "dfs") s = path_shifting_dfs(g, w, nullptr, budget);
      else if (o.method == "line-graph") s = path_shifting_via_line_graph(g, w, nullptr, budget);
      else throw InputError("unknown method '" + o.method + "'");
      break;
    case WalkKind::wlk:
      if (!o.to.empty()) {
        s = walk_shifting(g, w, walk_of(g, o.to));
        break;
      }
      [[fallthrough]];
    default: {
      const WalkKind k = kind_of(o);
      auto found = shift_reachable(
          g, w, k, [&](const Walk& x) { return is_avoidable(g, x, k, mode_of(o)); }, budget);
      if (!found) {
        std::cout << "no avoidable walk is reachable\n";
        return kClaimFailed;
      }
      s = *found;
    }
  }
  print_sequence(s);
  return kOk;
}

int cmd_reach(const Options& o) {
  const MultiGraph g = load_graph(o.graph_file);
  const WalkKind k = kind_of(o);
  const Walk from = walk_of(g, o.walk);
  const std::size_t budget = o.budget ? o.budget : kDefaultShiftBudget;
  std::optional<ShiftSequence> s;
  if (o.to.empty()) {
    s = shift_reachable(
        g, from, k, [&](const Walk& x) { return is_avoidable(g, x, k, mode_of(o)); }, budget);
  } else {
    const Walk target = canonical(walk_of(g, o.to));
    s = shift_reachable(
        g, from, k, [&](const Walk& x) { return canonical(x) == target; }, budget);
  }
  if (!s) {
    std::cout << "unreachable\n";
    return kClaimFailed;
  }
  print_sequence(*s);
  return kOk;
}

int cmd_family(const Options& o) {
  if (o.family.empty()) throw InputError("missing family name");
  FamilySpec spec{o.family.front(), {}};
  for (std::size_t i = 1; i < o.family.size(); ++i) {
    try {
      spec.params.push_back(std::stol(o.family[i]));
    } catch (const std::exception&) {
      throw InputError("bad family parameter '" + o.family[i] + "'");
    }
  }
  std::cout << serialize_graph(build(spec));
  return kOk;
}

int cmd_dot(const Options& o) {
  const MultiGraph g = load_graph(o.graph_file);
  std::optional<Walk> w;
  if (!o.walk.empty()) w = walk_of(g, o.walk);
  std::cout << to_dot(g, w);
  return kOk;
}

int cmd_verify(const Options& o) {
  static const std::vector<std::string> suites{"trails", "isometric", "claims", "induced",
                                               "paths",  "walks",     "oracle", "lemmas"};
  if (o.suite != "all" && std::find(suites.begin(), suites.end(), o.suite) == suites.end())
    throw InputError("unknown suite '" + o.suite + "'");
  auto wanted = [&](const std::string& s) { return o.suite == "all" || o.suite == s; };

  SuiteOptions opt;
  opt.max_vertices = o.max_vertices;
  opt.seed = o.seed;
  std::vector<CorpusGraph> corpus, mixed;
  if (wanted("induced") || wanted("paths") || wanted("walks") || wanted("oracle") ||
      wanted("lemmas"))
    corpus = small_graph_corpus(opt.max_vertices);
  if (wanted("walks") || wanted("oracle")) {
    mixed = corpus;
    for (auto& c : random_multigraph_corpus(opt.random_count, opt.seed)) mixed.push_back(c);
  }

  bool all_passed = true;
  auto emit = [&](const VerificationReport& r) {
    all_passed = all_passed && r.passed;
    if (o.json_lines) std::cout << to_json(r).dump() << '\n';
    else std::cout << to_text(r) << '\n';
    std::cout.flush();
  };
  auto emit_all = [&](const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs) emit(r);
  };

  if (wanted("trails")) emit_all(suite_trails());
  if (wanted("isometric")) emit_all(suite_isometric());
  if (wanted("claims")) emit_all(suite_claims());
  if (wanted("induced")) emit(suite_induced(corpus, opt));
  if (wanted("paths")) {
    emit(suite_paths(corpus, opt));
    emit(suite_line_graph(corpus, opt));
  }
  if (wanted("walks")) emit(suite_walks(mixed, opt));
  if (wanted("oracle")) emit(suite_oracle(mixed, opt));
  if (wanted("lemmas")) emit(suite_lemmas(corpus, opt));
  return all_passed ? kOk : kClaimFailed;
}

int cmd_stats(const Options& o) {
  SuiteOptions opt;
  opt.max_vertices = o.max_vertices;
  const auto corpus = small_graph_corpus(opt.max_vertices);
  const CorpusShiftStats st =
      shift_statistics(corpus, opt, o.budget ? o.budget : kDefaultShiftBudget);
  if (o.json_lines) {
    json j{{"graphs", corpus.size()},
           {"induced_runs", st.runs},
           {"induced_max_length", st.max_length},
           {"induced_mean_length", st.mean_length},
           {"refined_max_depth", st.max_depth},
           {"refined_mean_depth", st.mean_depth},
           {"budget_errors", st.budget_errors},
           {"path_runs", st.path_runs},
           {"path_max_length", st.path_max_length},
           {"path_mean_length", st.path_mean_length}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "graphs: " << corpus.size() << '\n'
              << "induced-path shifting runs: " << st.runs << '\n'
              << "  sequence length max/mean: " << st.max_length << " / " << st.mean_length
              << '\n'
              << "  RefinedShifting depth max/mean: " << st.max_depth << " / " << st.mean_depth
              << '\n'
              << "  budget errors: " << st.budget_errors << '\n'
              << "path shifting (dfs) runs: " << st.path_runs << '\n'
              << "  sequence length max/mean: " << st.path_max_length << " / "
              << st.path_mean_length << '\n';
  }
  return st.budget_errors == 0 ? kOk : kBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Avoidable walks, shifts and the counterexample families"};
  app.require_subcommand(1);
  Options o;

  auto walk_flags = [&](CLI::App* sub, bool graph = true) {
    if (graph) sub->add_option("graph", o.graph_file, "graph file in .mg format, '-' for stdin")->required();
    sub->add_option("--type", o.type, "walk type: wlk, trl, pth, ind or iso")
        ->check(CLI::IsMember({"wlk", "trl", "pth", "ind", "iso"}));
    sub->add_option("--walk", o.walk, "walk as vertex ids, e.g. 0,1:3,2 (':' names the edge)");
    sub->add_option("--mode", o.mode, "closability mode")->check(CLI::IsMember({"fast", "oracle"}));
    sub->add_option("--budget", o.budget, "search or step budget");
  };

  auto* classify_cmd = app.add_subcommand("classify", "is the walk of the given type");
  walk_flags(classify_cmd);
  classify_cmd->add_flag("--closed", o.closed, "treat the walk as a closed walk");
  auto* ext_cmd = app.add_subcommand("extensions", "list the t-extensions of a walk");
  walk_flags(ext_cmd);
  auto* closable_cmd = app.add_subcommand("closable", "is the walk t-closable");
  walk_flags(closable_cmd);
  auto* avoidable_cmd = app.add_subcommand("avoidable", "is the walk t-avoidable");
  walk_flags(avoidable_cmd);
  auto* shift_cmd = app.add_subcommand("shift", "shift a walk to an avoidable one");
  walk_flags(shift_cmd);
  shift_cmd->add_option("--method", o.method, "path shifting route")
      ->check(CLI::IsMember({"dfs", "line-graph"}));
  shift_cmd->add_option("--to", o.to, "target walk (type wlk)");
  auto* reach_cmd = app.add_subcommand("reach", "shortest shift sequence (BFS)");
  walk_flags(reach_cmd);
  reach_cmd->add_option("--to", o.to, "target walk; default: any avoidable walk");
  auto* family_cmd = app.add_subcommand("family", "print a family graph in .mg format");
  family_cmd->add_option("spec", o.family, "family name followed by its parameters")->required();
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz output, walk edges in bold");
  walk_flags(dot_cmd);
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the verification suites");
  verify_cmd->add_option("--suite", o.suite,
                         "all, trails, isometric, claims, induced, paths, walks, oracle, lemmas");
  verify_cmd->add_option("--seed", o.seed, "seed of the random multigraph corpus");
  verify_cmd->add_option("--max-vertices", o.max_vertices, "largest corpus graph order")
      ->check(CLI::Range(1, 8));
  verify_cmd->add_flag("--json-lines", o.json_lines, "one JSON report per line");
  auto* stats_cmd = app.add_subcommand("stats", "shift-sequence statistics over the corpus");
  stats_cmd->add_option("--max-vertices", o.max_vertices, "largest corpus graph order")
      ->check(CLI::Range(1, 8));
  stats_cmd->add_option("--budget", o.budget, "step budget per run");
  stats_cmd->add_flag("--json-lines", o.json_lines, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*ext_cmd) return cmd_extensions(o);
    if (*closable_cmd) return cmd_closable(o);
    if (*avoidable_cmd) return cmd_avoidable(o);
    if (*shift_cmd) return cmd_shift(o);
    if (*reach_cmd) return cmd_reach(o);
    if (*family_cmd) return cmd_family(o);
    if (*dot_cmd) return cmd_dot(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*stats_cmd) return cmd_stats(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kClaimFailed;
  }
  return kUsage;
}
