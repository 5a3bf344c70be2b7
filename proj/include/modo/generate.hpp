#pragma once
// Seeded instance generators for experiments and the CLI.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "graph.hpp"
#include "perm.hpp"

namespace modo::gen {

inline std::vector<std::string> numbered_ids(int n, const std::string& prefix = "v") {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (int v = 0; v < n; ++v) ids.push_back(prefix + std::to_string(v));
  return ids;
}

// Uniform bottom line over a fixed top line; about n^2/4 crossings.
inline PermDiagram random_diagram(int n, std::mt19937_64& rng) {
  std::vector<int> top(n), bottom(n);
  std::iota(top.begin(), top.end(), 0);
  std::iota(bottom.begin(), bottom.end(), 0);
  std::shuffle(bottom.begin(), bottom.end(), rng);
  return {top, bottom};
}

// Exactly m crossings: the bottom line is reached from the top line by m
// adjacent swaps, each of which creates one new inversion.
inline PermDiagram sparse_diagram(int n, long long m, std::mt19937_64& rng) {
  long long most = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > most) throw input_error("crossing count out of range for " + std::to_string(n) + " vertices");
  std::vector<int> top(n), bottom(n);
  std::iota(top.begin(), top.end(), 0);
  std::iota(bottom.begin(), bottom.end(), 0);
  if (2 * m > most) {
    // dense: start reversed and undo inversions instead
    std::reverse(bottom.begin(), bottom.end());
    std::uniform_int_distribution<int> at(0, n - 2);
    for (long long k = most; k > m;) {
      int i = at(rng);
      if (bottom[i] > bottom[i + 1]) std::swap(bottom[i], bottom[i + 1]), --k;
    }
    return {top, bottom};
  }
  if (n >= 2) {
    std::uniform_int_distribution<int> at(0, n - 2);
    for (long long k = 0; k < m;) {
      int i = at(rng);
      if (bottom[i] < bottom[i + 1]) std::swap(bottom[i], bottom[i + 1]), ++k;
    }
  }
  return {top, bottom};
}

// Feasible sunflower cut from one diagram: the first `shared` vertices form H,
// the rest are dealt at random to r inputs.
inline SunflowerInstance diagram_sunflower(const PermDiagram& d, int shared, int r, std::mt19937_64& rng) {
  int n = d.size();
  Graph whole = diagram_graph(d, numbered_ids(n));
  std::vector<int> h(shared);
  std::iota(h.begin(), h.end(), 0);
  std::vector<std::vector<int>> parts(r, h);
  std::uniform_int_distribution<int> pick(0, r - 1);
  for (int v = shared; v < n; ++v) parts[pick(rng)].push_back(v);
  SunflowerInstance inst{induced_subgraph(whole, h), {}};
  for (const auto& p : parts) inst.inputs.push_back(induced_subgraph(whole, p));
  return inst;
}

}  // namespace modo::gen
