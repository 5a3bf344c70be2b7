#pragma once
// TotalOrdering -> simultaneous orientation. The graph list is K_S followed by
// one five-vertex gadget per triple; a common orientation exists iff S has a
// total order placing every triple's middle element between the other two.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"

namespace modo {

struct Triple {
  std::string x, y, z;
};

struct TotalOrderingInstance {
  std::vector<std::string> elements;
  std::vector<Triple> triples;

  // Private gadget vertices of triple i (0-based), suffixed by i + 1.
  static std::string fresh_a(std::size_t i) { return "a_" + std::to_string(i + 1); }
  static std::string fresh_b(std::size_t i) { return "b_" + std::to_string(i + 1); }

  void validate() const {
    std::set<std::string> s;
    for (const auto& e : elements)
      if (!s.insert(e).second) throw input_error("duplicate element '" + e + "'");
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const auto& [x, y, z] = triples[i];
      for (const auto* e : {&x, &y, &z})
        if (!s.count(*e)) throw input_error("triple " + std::to_string(i + 1) + " uses unknown element '" + *e + "'");
      if (x == y || y == z || x == z) throw input_error("triple " + std::to_string(i + 1) + " repeats an element");
      if (s.count(fresh_a(i)) || s.count(fresh_b(i)))
        throw input_error("element name clashes with gadget vertex of triple " + std::to_string(i + 1));
    }
  }

  // True iff `order` (a permutation of the elements) puts each y between x and z.
  bool satisfied_by(const std::vector<std::string>& order) const {
    std::vector<std::pair<std::string, int>> at;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) at.emplace_back(order[i], i);
    std::sort(at.begin(), at.end());
    auto pos = [&](const std::string& e) {
      return std::lower_bound(at.begin(), at.end(), std::make_pair(e, -1))->second;
    };
    for (const auto& [x, y, z] : triples) {
      int px = pos(x), py = pos(y), pz = pos(z);
      if (!((px < py && py < pz) || (px > py && py > pz))) return false;
    }
    return true;
  }
};

// Edges x-a, x-y, x-z, y-z, z-b: exactly two transitive orientations, and in
// both of them y lies between x and z.
inline Graph triple_gadget(const Triple& t, const std::string& a, const std::string& b) {
  return Graph::with_ids(5, {{0, 3}, {0, 1}, {0, 2}, {1, 2}, {2, 4}}, {t.x, t.y, t.z, a, b});
}

inline std::vector<Graph> to_simorient(const TotalOrderingInstance& inst) {
  inst.validate();
  int k = static_cast<int>(inst.elements.size());
  std::vector<Edge> clique;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) clique.emplace_back(u, v);
  std::vector<Graph> out{Graph::with_ids(k, clique, inst.elements)};
  for (std::size_t i = 0; i < inst.triples.size(); ++i)
    out.push_back(triple_gadget(inst.triples[i], TotalOrderingInstance::fresh_a(i), TotalOrderingInstance::fresh_b(i)));
  return out;
}

}  // namespace modo
