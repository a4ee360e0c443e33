#pragma once

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "avoidable/walk.hpp"

namespace avoidable {

/// Malformed graph text; the message starts with "line <n>:".
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::optional<std::uint32_t> parse_id(std::string_view s) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\v\f";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (true) {
    i = s.find_first_not_of(" \t\r\v\f", i);
    if (i == std::string_view::npos) return out;
    std::size_t j = s.find_first_of(" \t\r\v\f", i);
    out.push_back(s.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i));
    if (j == std::string_view::npos) return out;
    i = j;
  }
}

}  // namespace detail

/// Parses the line-oriented ".mg" format: "# comment", "v <id> [label]",
/// "e <id> <u> <v>". Records may appear in any order.
inline MultiGraph parse_graph(std::string_view text) {
  struct EdgeRecord {
    std::size_t line;
    std::uint32_t id, u, v;
  };
  MultiGraph g;
  std::vector<EdgeRecord> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto tok = detail::split_ws(line);
    if (tok[0] == "v") {
      if (tok.size() < 2) throw ParseError(line_no, "vertex record needs an id");
      auto id = detail::parse_id(tok[1]);
      if (!id) throw ParseError(line_no, "bad vertex id '" + std::string(tok[1]) + "'");
      std::string label;
      if (tok.size() > 2) label = std::string(detail::trim(line.substr(tok[2].data() - line.data())));
      if (g.has_vertex(vid(*id)))
        throw ParseError(line_no, "duplicate vertex id " + std::to_string(*id));
      g.add_vertex(vid(*id), label);
    } else if (tok[0] == "e") {
      if (tok.size() != 4) throw ParseError(line_no, "edge record needs exactly 'e <id> <u> <v>'");
      auto id = detail::parse_id(tok[1]), u = detail::parse_id(tok[2]),
           v = detail::parse_id(tok[3]);
      if (!id || !u || !v) throw ParseError(line_no, "bad number in edge record");
      edges.push_back({line_no, *id, *u, *v});
    } else {
      throw ParseError(line_no, "unknown record kind '" + std::string(tok[0]) + "'");
    }
  }
  for (const EdgeRecord& r : edges) {
    if (g.has_edge(eid(r.id))) throw ParseError(r.line, "duplicate edge id " + std::to_string(r.id));
    if (!g.has_vertex(vid(r.u)) || !g.has_vertex(vid(r.v)))
      throw ParseError(r.line, "edge " + std::to_string(r.id) + " has a dangling endpoint");
    g.add_edge(eid(r.id), vid(r.u), vid(r.v));
  }
  return g;
}

inline std::string serialize_graph(const MultiGraph& g) {
  std::ostringstream out;
  out << "# multigraph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  for (VertexId v : g.vertices()) {
    out << "v " << v.value;
    if (const std::string* lab = g.label(v)) out << ' ' << *lab;
    out << '\n';
  }
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.endpoints(e);
    out << "e " << e.value << ' ' << a.value << ' ' << b.value << '\n';
  }
  return out.str();
}

/// Parses "0,1:3,2" (vertex ids, each optionally followed by ":edgeId" naming
/// the edge used to reach it). A step without an edge id must be unambiguous.
inline Walk parse_walk(const MultiGraph& g, std::string_view spec) {
  Walk w;
  std::size_t pos = 0;
  bool first = true;
  while (true) {
    std::size_t comma = spec.find(',', pos);
    std::string_view tok =
        detail::trim(spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                      : comma - pos));
    std::string_view vpart = tok, epart;
    bool has_edge = false;
    if (auto colon = tok.find(':'); colon != std::string_view::npos) {
      vpart = tok.substr(0, colon);
      epart = tok.substr(colon + 1);
      has_edge = true;
    }
    auto v = detail::parse_id(vpart);
    if (!v) throw InputError("bad vertex in walk: '" + std::string(tok) + "'");
    const VertexId x = vid(*v);
    g.require_vertex(x);
    if (first) {
      if (has_edge) throw InputError("first walk vertex cannot carry an edge id");
      w = Walk::at(x);
      first = false;
    } else {
      const VertexId prev = w.back();
      EdgeId e{};
      if (has_edge) {
        auto id = detail::parse_id(epart);
        if (!id) throw InputError("bad edge id in walk: '" + std::string(tok) + "'");
        e = eid(*id);
        g.require_edge(e);
        auto [a, b] = g.endpoints(e);
        if (!((a == prev && b == x) || (a == x && b == prev)))
          throw InputError("edge " + std::to_string(e.value) + " does not join " +
                           std::to_string(prev.value) + " and " + std::to_string(x.value));
      } else {
        const std::size_t m = g.multiplicity(prev, x);
        if (m == 0)
          throw InputError("no edge between " + std::to_string(prev.value) + " and " +
                           std::to_string(x.value));
        if (m > 1)
          throw InputError("ambiguous step " + std::to_string(prev.value) + "," +
                           std::to_string(x.value) + ": " + std::to_string(m) +
                           " edges, give one as vertex:edgeId");
        e = *g.edge_between(prev, x);
      }
      w.extend(e, x);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

/// Graphviz text. Parallel edges are drawn separately and loops as
/// self-arcs; edges of `overlay` are bold.
inline std::string to_dot(const MultiGraph& g, const std::optional<Walk>& overlay = std::nullopt) {
  std::map<EdgeId, std::size_t> on_walk;
  if (overlay)
    for (EdgeId e : overlay->edges) ++on_walk[e];
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : g.vertices()) {
    out << "  " << v.value;
    if (const std::string* lab = g.label(v)) out << " [label=" << quote(*lab) << "]";
    out << ";\n";
  }
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.endpoints(e);
    out << "  " << a.value << " -- " << b.value << " [id=\"e" << e.value << "\"";
    if (on_walk.count(e)) out << ", style=bold, penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace avoidable
