#pragma once
// Text formats. Errors are input_error with a "source:line: " prefix.
//
//   graph        line 1 "n m", then n vertex ids, then m lines "id id"
//   orientation  one "tail head" line per arc (partial orientations too)
//   manifest     "shared FILE" (at most once) and "graph FILE" lines; paths
//                relative to the manifest
//   diagram      two lines of ids: top, bottom
//   cdiagram     three lines of ids: outer, inner, wrapped chords
//   ordering     line 1 the elements, then one "x y z" line per triple
//
// Blank lines and '#' comments are skipped everywhere except in diagram files,
// whose lines are positional and may legitimately be empty.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "cperm.hpp"
#include "graph.hpp"
#include "perm.hpp"
#include "reductions.hpp"

namespace modo::io {

namespace detail {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source, bool skip_blank)
      : in_(in), source_(std::move(source)), skip_(skip_blank) {}

  // Next line split on whitespace; false at end of input.
  bool next(std::vector<std::string>& words) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (skip_) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
      }
      words.clear();
      for (std::size_t i = 0; i < line.size();) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) words.emplace_back(line, i, j - i);
        i = j;
      }
      if (skip_ && words.empty()) continue;
      return true;
    }
    return false;
  }

  std::vector<std::string> require(const char* what) {
    std::vector<std::string> w;
    if (!next(w)) fail(std::string("unexpected end of input, expected ") + what);
    return w;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw input_error(source_ + ":" + std::to_string(line_) + ": " + msg);
  }

  int to_int(const std::string& s) const {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || v < 0) fail("expected a non-negative integer, got '" + s + "'");
    return v;
  }

  int vertex(const Graph& g, const std::string& id) const {
    int v = g.index_of(id);
    if (v < 0) fail("unknown vertex '" + id + "'");
    return v;
  }

  std::vector<int> vertices(const Graph& g, const std::vector<std::string>& ids) const {
    std::vector<int> out;
    for (const auto& id : ids) out.push_back(vertex(g, id));
    return out;
  }

  // Rethrows an error raised while building from this line with its position.
  template <class F>
  auto here(F f) const {
    try {
      return f();
    } catch (const input_error& e) {
      fail(e.what());
    }
  }

  bool at_end() {
    std::vector<std::string> w;
    return !next(w);
  }

 private:
  std::istream& in_;
  std::string source_;
  bool skip_;
  int line_ = 0;
};

inline std::ifstream open(const std::filesystem::path& p) {
  std::ifstream f(p);
  if (!f) throw input_error(p.string() + ": cannot open");
  return f;
}

inline void write_ids(std::ostream& out, const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << g.id(vs[i]);
  out << '\n';
}

}  // namespace detail

inline Graph read_graph(std::istream& in, const std::string& source = "<graph>") {
  detail::LineReader r(in, source, true);
  auto head = r.require("'n m'");
  if (head.size() != 2) r.fail("expected 'n m'");
  int n = r.to_int(head[0]), m = r.to_int(head[1]);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) {
    auto w = r.require("a vertex id");
    if (w.size() != 1) r.fail("expected one vertex id per line");
    ids.push_back(w[0]);
  }
  Graph named = r.here([&] { return Graph::with_ids(n, {}, ids); });
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    auto w = r.require("an edge");
    if (w.size() != 2) r.fail("expected 'id id'");
    int u = r.vertex(named, w[0]), v = r.vertex(named, w[1]);
    if (u == v) r.fail("self-loop at '" + w[0] + "'");
    edges.emplace_back(u, v);
  }
  if (!r.at_end()) r.fail("trailing content after " + std::to_string(m) + " edges");
  return r.here([&] { return Graph::with_ids(n, edges, ids); });
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (int v = 0; v < g.n(); ++v) out << g.id(v) << '\n';
  for (int e = 0; e < g.m(); ++e) out << g.id(g.edge(e).first) << ' ' << g.id(g.edge(e).second) << '\n';
}

// Arcs as index pairs of g; wrap in PartialOrientation(g, arcs) to validate.
inline std::vector<Edge> read_arcs(std::istream& in, const Graph& g, const std::string& source = "<orientation>") {
  detail::LineReader r(in, source, true);
  std::vector<Edge> arcs;
  for (std::vector<std::string> w; r.next(w);) {
    if (w.size() != 2) r.fail("expected 'tail head'");
    int t = r.vertex(g, w[0]), h = r.vertex(g, w[1]);
    if (!g.adjacent(t, h)) r.fail("'" + w[0] + " " + w[1] + "' is not an edge");
    arcs.emplace_back(t, h);
  }
  return arcs;
}

inline void write_orientation(std::ostream& out, const Orientation& o) {
  const Graph& g = o.graph();
  for (int e = 0; e < g.m(); ++e) out << g.id(o.tail(e)) << ' ' << g.id(o.head(e)) << '\n';
}

struct Manifest {
  std::filesystem::path shared;  // empty for a plain graph list
  std::vector<std::filesystem::path> graphs;
};

inline Manifest read_manifest(const std::filesystem::path& path) {
  auto f = detail::open(path);
  detail::LineReader r(f, path.string(), true);
  Manifest m;
  auto base = path.parent_path();
  for (std::vector<std::string> w; r.next(w);) {
    if (w.size() != 2 || (w[0] != "shared" && w[0] != "graph")) r.fail("expected 'shared FILE' or 'graph FILE'");
    if (w[0] == "shared") {
      if (!m.shared.empty()) r.fail("second 'shared' line");
      m.shared = base / w[1];
    } else {
      m.graphs.push_back(base / w[1]);
    }
  }
  return m;
}

inline Graph read_graph_file(const std::filesystem::path& p) {
  auto f = detail::open(p);
  return read_graph(f, p.string());
}

inline std::vector<Graph> read_graph_list(const Manifest& m) {
  std::vector<Graph> out;
  for (const auto& p : m.graphs) out.push_back(read_graph_file(p));
  return out;
}

// Loads and validates a sunflower manifest (shared graph required).
inline SunflowerInstance read_sunflower(const std::filesystem::path& manifest) {
  Manifest m = read_manifest(manifest);
  if (m.shared.empty()) throw input_error(manifest.string() + ": no 'shared' line");
  SunflowerInstance inst{read_graph_file(m.shared), read_graph_list(m)};
  if (auto v = validate_sunflower(inst); !v) throw input_error(manifest.string() + ": " + v.diagnostic);
  return inst;
}

inline void write_manifest(std::ostream& out, const Manifest& m) {
  if (!m.shared.empty()) out << "shared " << m.shared.generic_string() << '\n';
  for (const auto& p : m.graphs) out << "graph " << p.generic_string() << '\n';
}

inline PermDiagram read_perm_diagram(std::istream& in, const Graph& g, const std::string& source = "<diagram>") {
  detail::LineReader r(in, source, false);
  auto top = r.vertices(g, r.require("the top line"));
  auto bottom = r.vertices(g, r.require("the bottom line"));
  for (std::vector<std::string> w; r.next(w);)
    if (!w.empty()) r.fail("trailing content after two lines");
  return r.here([&] { return PermDiagram(top, bottom); });
}

inline void write_perm_diagram(std::ostream& out, const PermDiagram& d, const Graph& g) {
  detail::write_ids(out, g, d.top());
  detail::write_ids(out, g, d.bottom());
}

inline CPermDiagram read_cperm_diagram(std::istream& in, const Graph& g, const std::string& source = "<cdiagram>") {
  detail::LineReader r(in, source, false);
  auto outer = r.vertices(g, r.require("the outer line"));
  auto inner = r.vertices(g, r.require("the inner line"));
  std::vector<int> wrapped;
  std::vector<std::string> w;
  if (r.next(w)) wrapped = r.vertices(g, w);
  while (r.next(w))
    if (!w.empty()) r.fail("trailing content after three lines");
  return r.here([&] { return CPermDiagram(outer, inner, wrapped); });
}

inline void write_cperm_diagram(std::ostream& out, const CPermDiagram& c, const Graph& g) {
  detail::write_ids(out, g, c.outer());
  detail::write_ids(out, g, c.inner());
  detail::write_ids(out, g, c.wrapped());
}

inline TotalOrderingInstance read_total_ordering(std::istream& in, const std::string& source = "<ordering>") {
  detail::LineReader r(in, source, true);
  TotalOrderingInstance inst;
  inst.elements = r.require("the element line");
  for (std::vector<std::string> w; r.next(w);) {
    if (w.size() != 3) r.fail("expected a triple 'x y z'");
    inst.triples.push_back({w[0], w[1], w[2]});
  }
  r.here([&] {
    inst.validate();
    return 0;
  });
  return inst;
}

inline void write_total_ordering(std::ostream& out, const TotalOrderingInstance& inst) {
  for (std::size_t i = 0; i < inst.elements.size(); ++i) out << (i ? " " : "") << inst.elements[i];
  out << '\n';
  for (const auto& [x, y, z] : inst.triples) out << x << ' ' << y << ' ' << z << '\n';
}

}  // namespace modo::io
