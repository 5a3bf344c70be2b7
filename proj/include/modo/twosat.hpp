#pragma once

// 2-CNF with implication-graph SCC solving.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "outcome.hpp"

namespace modo {

// Literal 2v is variable v, 2v+1 its negation.
struct Lit {
  int code;
  int var() const { return code >> 1; }
  bool negated() const { return code & 1; }
  Lit operator~() const { return {code ^ 1}; }
  bool operator==(const Lit&) const = default;
};

inline Lit pos(int v) { return {2 * v}; }
inline Lit neg(int v) { return {2 * v + 1}; }

class Formula2 {
 public:
  int add_var(std::string name = {}) {
    names_.push_back(std::move(name));
    return static_cast<int>(names_.size()) - 1;
  }
  int vars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }

  void clause(Lit a, Lit b) {
    MODO_CHECK(a.var() < vars() && b.var() < vars(), "clause over undeclared variable");
    clauses_.emplace_back(a, b);
  }
  void fix(Lit a) { clause(a, a); }
  void implies(Lit a, Lit b) { clause(~a, b); }
  void iff(Lit a, Lit b) {
    clause(~a, b);
    clause(a, ~b);
  }
  void differ(Lit a, Lit b) {
    clause(a, b);
    clause(~a, ~b);
  }
  // Appends g's clauses. g's variables below `shared` are identified with
  // ours; variable v >= shared becomes off + (v - shared), off returned.
  int absorb(const Formula2& g, int shared = 0) {
    MODO_CHECK(shared <= vars() && shared <= g.vars(), "shared prefix out of range");
    int off = vars();
    for (int v = shared; v < g.vars(); ++v) names_.push_back(g.names_[v]);
    auto map = [&](Lit l) { return l.var() < shared ? l : Lit{l.code + 2 * (off - shared)}; };
    for (auto [a, b] : g.clauses_) clauses_.emplace_back(map(a), map(b));
    return off;
  }

  const std::vector<std::pair<Lit, Lit>>& clauses() const { return clauses_; }

  bool satisfied_by(const std::vector<bool>& x) const {
    auto val = [&](Lit l) { return x[l.var()] != l.negated(); };
    for (auto [a, b] : clauses_)
      if (!val(a) && !val(b)) return false;
    return true;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<Lit, Lit>> clauses_;
};

// Satisfying assignment or nullopt. Variables that nothing forces come out false.
inline std::optional<std::vector<bool>> solve(const Formula2& f) {
  int n = 2 * f.vars();
  std::vector<int> head(n + 1, 0), to;
  for (auto [a, b] : f.clauses()) ++head[(~a).code], ++head[(~b).code];
  for (int i = 0; i < n; ++i) head[i + 1] += head[i];
  to.resize(head[n]);
  for (auto [a, b] : f.clauses()) {
    to[--head[(~a).code]] = b.code;
    to[--head[(~b).code]] = a.code;
  }

  // Iterative Tarjan; comp ids grow in reverse topological order.
  std::vector<int> idx(n, -1), low(n, 0), comp(n, -1), stack, frames;
  std::vector<int> cursor(n, 0);
  int counter = 0, ncomp = 0;
  auto open = [&](int v) {
    idx[v] = low[v] = counter++;
    cursor[v] = head[v];
    stack.push_back(v);
    frames.push_back(v);
  };
  // Negative literals first so free variables settle to false.
  for (int s0 = 0; s0 < n; ++s0) {
    int s = s0 < n / 2 ? 2 * s0 + 1 : 2 * (s0 - n / 2);
    if (idx[s] >= 0) continue;
    open(s);
    while (!frames.empty()) {
      int v = frames.back();
      if (cursor[v] < head[v + 1]) {
        int w = to[cursor[v]++];
        if (idx[w] < 0) open(w);
        else if (comp[w] < 0) low[v] = std::min(low[v], idx[w]);
        continue;
      }
      frames.pop_back();
      if (!frames.empty()) low[frames.back()] = std::min(low[frames.back()], low[v]);
      if (low[v] == idx[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
    }
  }

  std::vector<bool> x(f.vars());
  for (int v = 0; v < f.vars(); ++v) {
    if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
    x[v] = comp[2 * v] < comp[2 * v + 1];
  }
  MODO_CHECK(f.satisfied_by(x), "2-SAT assignment violates a clause");
  return x;
}

}  // namespace modo
