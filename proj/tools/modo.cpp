// modo: file-driven front end.
//
// Exit status: 0 feasible / yes, 1 infeasible / no, 2 malformed input,
// 3 fast answer disagrees with the oracle (--oracle), 4 internal check failed.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "modo/modo.hpp"
#include "modo/oracle.hpp"

namespace fs = std::filesystem;
using namespace modo;

namespace {

constexpr int kYes = 0, kNo = 1, kBadInput = 2, kOracleMismatch = 3, kInternal = 4;

struct oracle_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string out;
  bool oracle = false;
  bool timing = false;
  unsigned seed = 1;
};

Options opt;

// Runs f and, with --timing, reports its wall time on stderr.
template <class F>
auto timed(const char* label, F f) {
  auto start = std::chrono::steady_clock::now();
  auto report = [&] {
    if (!opt.timing) return;
    std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    std::cerr << "time " << label << " " << ms.count() << " ms\n";
  };
  if constexpr (std::is_void_v<decltype(f())>) {
    f();
    report();
  } else {
    auto r = f();
    report();
    return r;
  }
}

// Artifacts go to --out DIR when given, otherwise to stdout after a header.
void emit(const std::string& name, const std::function<void(std::ostream&)>& write) {
  if (opt.out.empty()) {
    std::cout << "--- " << name << '\n';
    write(std::cout);
    return;
  }
  fs::create_directories(opt.out);
  fs::path p = fs::path(opt.out) / name;
  std::ofstream f(p);
  if (!f) throw input_error(p.string() + ": cannot write");
  write(f);
}

// One artifact name per input graph: the file stem, or index_stem on clashes.
std::vector<std::string> artifact_names(const std::vector<fs::path>& files, const std::string& ext) {
  std::map<std::string, int> seen;
  for (const auto& f : files) ++seen[f.stem().string()];
  std::vector<std::string> out;
  for (std::size_t i = 0; i < files.size(); ++i) {
    auto stem = files[i].stem().string();
    out.push_back((seen[stem] > 1 ? std::to_string(i) + "_" + stem : stem) + ext);
  }
  return out;
}

// With --oracle, compares the fast verdict to a brute-force one. Instances
// beyond the enumeration budget are reported and skipped.
void cross_check(bool fast, const std::function<bool()>& brute) {
  if (!opt.oracle) return;
  try {
    bool want = timed("oracle", brute);
    if (want != fast)
      throw oracle_mismatch(std::string("oracle says ") + (want ? "feasible" : "infeasible") + ", fast path says " +
                            (fast ? "feasible" : "infeasible"));
    std::cerr << "oracle: agrees\n";
  } catch (const oracle::budget_exceeded& e) {
    std::cerr << "oracle: skipped (" << e.what() << ")\n";
  }
}

int infeasible(const Infeasible& why) {
  std::cout << "INFEASIBLE " << why.reason;
  if (!why.witness.empty()) std::cout << " " << why.witness;
  std::cout << '\n';
  return kNo;
}

Graph load_graph(const std::string& path) {
  return timed("parse", [&] { return io::read_graph_file(path); });
}

template <class Read>
auto load_with(const std::string& path, Read read) {
  std::ifstream f(path);
  if (!f) throw input_error(path + ": cannot open");
  return read(f, path);
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

// ---- subcommands ----

int cmd_recognize(const std::string& file) {
  Graph g = load_graph(file);
  auto o = timed("solve", [&] { return orient_ext(g, PartialOrientation(g, {})); });
  cross_check(o.ok(), [&] { return !oracle::enum_transitive_orientations(g).empty(); });
  if (!o) {
    std::cout << "NOT-COMPARABILITY\n";
    return kNo;
  }
  std::cout << "COMPARABILITY\n";
  emit(stem_of(file) + ".orientation", [&](std::ostream& s) { io::write_orientation(s, *o); });
  return kYes;
}

int cmd_md(const std::string& file) {
  Graph g = load_graph(file);
  MDTree t = timed("solve", [&] { return MDTree(g); });
  if (opt.oracle) {
    bool all_modules = true;
    for (int x = 0; x < t.size(); ++x) {
      auto l = t.leaves(x);
      all_modules &= oracle::is_module(g, std::vector<int>(l.begin(), l.end()));
    }
    cross_check(true, [&] { return all_modules; });
  }
  // iterative preorder; depth can reach n
  std::vector<std::pair<int, int>> stack{{t.root(), 0}};
  while (!stack.empty()) {
    auto [x, depth] = stack.back();
    stack.pop_back();
    std::string pad(2 * depth, ' ');
    if (t.is_leaf(x)) {
      std::cout << pad << "LEAF " << g.id(x) << '\n';
      continue;
    }
    std::cout << pad << kind_name(t.kind(x)) << " {";
    auto l = t.leaves(x);
    for (std::size_t i = 0; i < l.size(); ++i) std::cout << (i ? " " : "") << g.id(l[i]);
    std::cout << "}\n";
    const Graph& q = t.quotient(x);
    std::cout << pad << "  quotient";
    for (int e = 0; e < q.m(); ++e) std::cout << ' ' << q.edge(e).first << '-' << q.edge(e).second;
    std::cout << '\n';
    const auto& kids = t.children(x);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, depth + 1);
  }
  return kYes;
}

int cmd_orient_ext(const std::string& gfile, const std::string& wfile) {
  Graph g = load_graph(gfile);
  PartialOrientation w(g, load_with(wfile, [&](std::istream& in, const std::string& src) {
                         return io::read_arcs(in, g, src);
                       }));
  auto o = timed("solve", [&] { return orient_ext(g, w); });
  cross_check(o.ok(), [&] {
    for (const auto& c : oracle::enum_transitive_orientations(g))
      if (contains(c, w)) return true;
    return false;
  });
  if (!o) return infeasible(o.why());
  std::cout << "FEASIBLE\n";
  emit(stem_of(gfile) + ".orientation", [&](std::ostream& s) { io::write_orientation(s, *o); });
  return kYes;
}

struct Loaded {
  SunflowerInstance inst;
  std::vector<fs::path> files;
};

Loaded load_sunflower(const std::string& manifest) {
  return timed("parse", [&] {
    auto m = io::read_manifest(manifest);
    return Loaded{io::read_sunflower(manifest), m.graphs};
  });
}

int cmd_sim_orient(const std::string& manifest) {
  auto [inst, files] = load_sunflower(manifest);
  auto got = timed("solve", [&] { return sim_orient(inst); });
  cross_check(got.ok(), [&] { return oracle::brute_simorient(inst).has_value(); });
  if (!got) return infeasible(got.why());
  std::cout << "FEASIBLE\n";
  auto names = artifact_names(files, ".orientation");
  for (std::size_t i = 0; i < names.size(); ++i)
    emit(names[i], [&](std::ostream& s) { io::write_orientation(s, (*got)[i]); });
  return kYes;
}

int cmd_rep_ext_perm(const std::string& gfile, const std::string& dfile) {
  Graph g = load_graph(gfile);
  auto partial = load_with(dfile, [&](std::istream& in, const std::string& src) {
    return io::read_perm_diagram(in, g, src);
  });
  auto d = timed("solve", [&] { return rep_ext_perm(g, partial); });
  cross_check(d.ok(), [&] { return oracle::brute_rep_ext_perm(g, partial).has_value(); });
  if (!d) return infeasible(d.why());
  std::cout << "FEASIBLE\n";
  emit(stem_of(gfile) + ".diagram", [&](std::ostream& s) { io::write_perm_diagram(s, *d, g); });
  return kYes;
}

int cmd_sim_rep_perm(const std::string& manifest) {
  auto [inst, files] = load_sunflower(manifest);
  auto got = timed("solve", [&] { return sunflower_perm(inst); });
  cross_check(got.ok(), [&] { return oracle::brute_sunflower_perm(inst).has_value(); });
  if (!got) return infeasible(got.why());
  std::cout << "FEASIBLE\n";
  auto names = artifact_names(files, ".diagram");
  for (std::size_t i = 0; i < names.size(); ++i)
    emit(names[i], [&](std::ostream& s) { io::write_perm_diagram(s, (*got)[i], inst.inputs[i]); });
  return kYes;
}

int cmd_rep_ext_cperm(const std::string& gfile, const std::string& dfile) {
  Graph g = load_graph(gfile);
  auto partial = load_with(dfile, [&](std::istream& in, const std::string& src) {
    return io::read_cperm_diagram(in, g, src);
  });
  auto c = timed("solve", [&] { return rep_ext_cperm(g, partial); });
  cross_check(c.ok(), [&] { return oracle::brute_rep_ext_cperm(g, partial).has_value(); });
  if (!c) return infeasible(c.why());
  std::cout << "FEASIBLE\n";
  emit(stem_of(gfile) + ".cdiagram", [&](std::ostream& s) { io::write_cperm_diagram(s, *c, g); });
  return kYes;
}

int cmd_sim_rep_cperm(const std::string& manifest) {
  auto [inst, files] = load_sunflower(manifest);
  auto got = timed("solve", [&] { return sunflower_cperm(inst); });
  cross_check(got.ok(), [&] { return oracle::brute_sunflower_cperm(inst).has_value(); });
  if (!got) return infeasible(got.why());
  std::cout << "FEASIBLE\n";
  auto names = artifact_names(files, ".cdiagram");
  for (std::size_t i = 0; i < names.size(); ++i)
    emit(names[i], [&](std::ostream& s) { io::write_cperm_diagram(s, (*got)[i], inst.inputs[i]); });
  return kYes;
}

int cmd_reduce(const std::string& file) {
  if (opt.out.empty()) throw input_error("reduce-totalordering needs --out DIR for the manifest and graph files");
  auto inst = load_with(file, [](std::istream& in, const std::string& src) { return io::read_total_ordering(in, src); });
  auto graphs = timed("solve", [&] { return to_simorient(inst); });
  if (opt.oracle) {
    // the reduction is sound iff both sides of the equivalence agree
    try {
      bool ordered = oracle::brute_total_ordering(inst).has_value();
      cross_check(ordered, [&] { return oracle::brute_simorient(graphs).has_value(); });
    } catch (const oracle::budget_exceeded& e) {
      std::cerr << "oracle: skipped (" << e.what() << ")\n";
    }
  }
  io::Manifest m;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::string name = "g" + std::to_string(i) + ".graph";
    emit(name, [&](std::ostream& s) { io::write_graph(s, graphs[i]); });
    m.graphs.push_back(name);
  }
  emit("reduction.manifest", [&](std::ostream& s) { io::write_manifest(s, m); });
  std::cout << "WROTE " << (fs::path(opt.out) / "reduction.manifest").string() << '\n';
  return kYes;
}

// Random permutation graph on vertices v0..v{n-1}, seeded by --seed. With a
// crossing count the graph has exactly that many edges; otherwise about n^2/4.
int cmd_random_perm(int n, long long edges) {
  if (n < 0) throw input_error("vertex count must be non-negative");
  std::mt19937_64 rng(opt.seed);
  PermDiagram d = edges < 0 ? gen::random_diagram(n, rng) : gen::sparse_diagram(n, edges, rng);
  Graph g = diagram_graph(d, gen::numbered_ids(n));
  emit("perm" + std::to_string(n) + ".graph", [&](std::ostream& s) { io::write_graph(s, g); });
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular-decomposition tools for orientation and representation extension"};
  app.require_subcommand(1);
  app.add_option("--out", opt.out, "Write result files into this directory instead of stdout");
  app.add_flag("--oracle", opt.oracle, "Cross-check the answer against brute force (small inputs only)");
  app.add_flag("--timing", opt.timing, "Report parse/solve wall time on stderr");
  app.add_option("--seed", opt.seed, "Seed for instance generators");

  std::string a, b;
  int n = 0;
  std::function<int()> run;
  auto one = [&](const char* name, const char* help, const char* what, std::function<int()> f) {
    auto* s = app.add_subcommand(name, help);
    s->add_option(what, a)->required();
    s->callback([&run, f] { run = f; });
  };
  auto two = [&](const char* name, const char* help, const char* w1, const char* w2, std::function<int()> f) {
    auto* s = app.add_subcommand(name, help);
    s->add_option(w1, a)->required();
    s->add_option(w2, b)->required();
    s->callback([&run, f] { run = f; });
  };
  one("recognize", "Decide whether a graph is a comparability graph", "graph", [&] { return cmd_recognize(a); });
  one("md", "Print the modular decomposition tree", "graph", [&] { return cmd_md(a); });
  two("orient-ext", "Extend a partial orientation transitively", "graph", "partial",
      [&] { return cmd_orient_ext(a, b); });
  one("sim-orient", "Simultaneous orientation of a sunflower", "manifest", [&] { return cmd_sim_orient(a); });
  two("rep-ext-perm", "Extend a partial permutation diagram", "graph", "partial",
      [&] { return cmd_rep_ext_perm(a, b); });
  one("sim-rep-perm", "Simultaneous permutation diagrams of a sunflower", "manifest",
      [&] { return cmd_sim_rep_perm(a); });
  two("rep-ext-cperm", "Extend a partial circular permutation diagram", "graph", "partial",
      [&] { return cmd_rep_ext_cperm(a, b); });
  one("sim-rep-cperm", "Simultaneous circular permutation diagrams of a sunflower", "manifest",
      [&] { return cmd_sim_rep_cperm(a); });
  one("reduce-totalordering", "Turn a TotalOrdering instance into a graph list", "instance",
      [&] { return cmd_reduce(a); });
  auto* generator = app.add_subcommand("random-perm", "Generate a random permutation graph");
  long long edges = -1;
  generator->add_option("n", n)->required();
  generator->add_option("--edges", edges, "Exact number of edges (default: uniform permutation)");
  generator->callback([&] { run = [&] { return cmd_random_perm(n, edges); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kYes : kBadInput;
  }
  try {
    return run();
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const oracle_mismatch& e) {
    std::cerr << "oracle: MISMATCH: " << e.what() << '\n';
    return kOracleMismatch;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
