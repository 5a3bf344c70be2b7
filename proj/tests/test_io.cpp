#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "modo/io.hpp"
#include "support.hpp"

using namespace modo;
namespace fs = std::filesystem;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return io::read_graph(in, "g");
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const input_error& e) {
    return e.what();
  }
  return "";
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("modo_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(IO, GraphRoundTrip) {
  Graph g = parse("4 3\n# a path\na\nb\nc\nd\na b\nb c\n\nc d\n");
  EXPECT_EQ(g, testkit::make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}));
  std::ostringstream out;
  io::write_graph(out, g);
  EXPECT_EQ(parse(out.str()), g);
  EXPECT_EQ(parse("0 0\n").n(), 0);
}

TEST(IO, GraphErrorsCarryLineNumbers) {
  EXPECT_EQ(error_of("2 1\nu\nv\nu w\n"), "g:4: unknown vertex 'w'");
  EXPECT_EQ(error_of("2 1\nu\nu\nu u\n"), "g:3: duplicate vertex id 'u'");
  EXPECT_EQ(error_of("2 1\nu\nv\nu u\n"), "g:4: self-loop at 'u'");
  EXPECT_EQ(error_of("2 x\n"), "g:1: expected a non-negative integer, got 'x'");
  EXPECT_EQ(error_of("2 1\nu\nv\n"), "g:3: unexpected end of input, expected an edge");
  EXPECT_EQ(error_of("2 1\nu\nv\nu v\nv u\n"), "g:5: trailing content after 1 edges");
  EXPECT_NE(error_of("2 2\nu\nv\nu v\nv u\n").find("parallel edge"), std::string::npos);
}

TEST(IO, Orientations) {
  Graph g = testkit::make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  std::istringstream in("b a\n");
  PartialOrientation w(g, io::read_arcs(in, g));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w.arcs()[0], Edge(1, 0));
  std::istringstream bad("a c\n");
  EXPECT_THROW(io::read_arcs(bad, g, "w"), input_error);

  Orientation o(g);
  o.set(2, 1);
  std::ostringstream out;
  io::write_orientation(out, o);
  EXPECT_EQ(out.str(), "a b\nc b\n");
}

TEST(IO, Diagrams) {
  Graph g = testkit::make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  std::istringstream in("a c b d\nb a d c\n");
  PermDiagram d = io::read_perm_diagram(in, g);
  EXPECT_TRUE(realizes(d, g));
  std::ostringstream out;
  io::write_perm_diagram(out, d, g);
  EXPECT_EQ(out.str(), "a c b d\nb a d c\n");

  std::istringstream partial("a d\nd a\n");
  EXPECT_EQ(io::read_perm_diagram(partial, g).size(), 2);
  std::istringstream mismatch("a b\na c\n");
  EXPECT_THROW(io::read_perm_diagram(mismatch, g), input_error);

  std::istringstream circ("a c b d\nb a d c\na\n");
  CPermDiagram c = io::read_cperm_diagram(circ, g);
  EXPECT_EQ(c.wrapped(), std::vector<int>{0});
  std::ostringstream cout_;
  io::write_cperm_diagram(cout_, c, g);
  EXPECT_EQ(cout_.str(), "a c b d\nb a d c\na\n");
  std::istringstream nowrap("a c b d\nb a d c\n");
  EXPECT_TRUE(io::read_cperm_diagram(nowrap, g).wrapped().empty());
}

TEST(IO, ManifestsResolveRelativePaths) {
  auto dir = scratch("manifest");
  fs::create_directories(dir / "sub");
  put(dir / "sub" / "h.graph", "2 1\nu\nv\nu v\n");
  put(dir / "sub" / "g1.graph", "3 2\nu\nv\nw\nu v\nv w\n");
  put(dir / "sub" / "g2.graph", "3 2\nv\nu\nx\nu v\nu x\n");
  put(dir / "sf.manifest", "shared sub/h.graph\ngraph sub/g1.graph\ngraph sub/g2.graph\n");
  auto inst = io::read_sunflower(dir / "sf.manifest");
  EXPECT_EQ(inst.shared.n(), 2);
  EXPECT_EQ(inst.inputs.size(), 2u);

  put(dir / "bad.manifest", "shared sub/h.graph\nshared sub/h.graph\n");
  EXPECT_THROW(io::read_manifest(dir / "bad.manifest"), input_error);
  put(dir / "noh.manifest", "graph sub/g1.graph\n");
  EXPECT_THROW(io::read_sunflower(dir / "noh.manifest"), input_error);
  // shared edge missing from an input is not a sunflower
  put(dir / "sub" / "g3.graph", "2 0\nu\nv\n");
  put(dir / "off.manifest", "shared sub/h.graph\ngraph sub/g3.graph\n");
  EXPECT_THROW(io::read_sunflower(dir / "off.manifest"), input_error);
  EXPECT_THROW(io::read_sunflower(dir / "missing.manifest"), input_error);
  fs::remove_all(dir);
}

TEST(IO, TotalOrderingRoundTrip) {
  std::istringstream in("x y z w\nx y z\n# second\ny z w\n");
  auto inst = io::read_total_ordering(in);
  ASSERT_EQ(inst.triples.size(), 2u);
  std::ostringstream out;
  io::write_total_ordering(out, inst);
  EXPECT_EQ(out.str(), "x y z w\nx y z\ny z w\n");
  std::istringstream bad("x y z\nx y q\n");
  EXPECT_THROW(io::read_total_ordering(bad), input_error);
}
