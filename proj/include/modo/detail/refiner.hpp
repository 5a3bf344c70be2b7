#pragma once

#include <deque>
#include <span>
#include <vector>

#include "../graph.hpp"

namespace modo::detail {

// Partition refinement started from ({v}, V - v) and run to the coarsest
// partition in which every part is uniform towards every vertex outside it.
//
// Every vertex pivots once while its part is still unpivoted. When an already
// pivoted part splits, the smaller piece S replays its pivots and every
// neighbour of S re-splits the pieces of S. Each vertex lands in a smaller
// piece O(log n) times, giving O(n + m log n).
//
// Ordered modes keep the parts in a sequence. A split of part X by pivot p
// places X's neighbours of p after the non-neighbours when p lies before X,
// and in front otherwise (Ordered). OrderedComplement applies the same rule
// to the complement graph without building it.
class Refiner {
 public:
  enum class Mode { Unordered, Ordered, OrderedComplement };

  Refiner(const Graph& g, Mode mode) : g_(g), mode_(mode) {}

  void run(int v) {
    int n = g_.n();
    elems_.resize(n);
    pos_.assign(n, 0);
    part_.assign(n, 0);
    begin_.clear(), end_.clear(), marks_.clear(), pivoted_.clear(), front_.clear();
    elems_[0] = v;
    for (int x = 0, i = 1; x < n; ++x)
      if (x != v) elems_[i++] = x;
    for (int i = 0; i < n; ++i) pos_[elems_[i]] = i;
    new_part(0, 1);
    if (n > 1) {
      new_part(1, n);
      for (int i = 1; i < n; ++i) part_[elems_[i]] = 1;
    }
    bucket_.assign(n, 0);
    stamp_.assign(n, -1);

    std::deque<int> queue;
    for (int p = 0; p < static_cast<int>(begin_.size()); ++p) queue.push_back(p);
    fresh_ = &queue;
    std::vector<int> members;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (pivoted_[x]) continue;
      pivoted_[x] = 1;
      members.assign(elems_.begin() + begin_[x], elems_.begin() + end_[x]);
      for (int y : members) {
        refine(y, g_.adj(y));
        drain_events();
      }
    }
  }

  int parts() const { return static_cast<int>(begin_.size()); }
  int part_of(int x) const { return part_[x]; }
  std::span<const int> members(int p) const {
    return {elems_.data() + begin_[p], elems_.data() + end_[p]};
  }
  // Vertices in sequence order (meaningful in ordered modes).
  const std::vector<int>& order() const { return elems_; }

 private:
  int new_part(int b, int e) {
    begin_.push_back(b);
    end_.push_back(e);
    marks_.push_back(0);
    pivoted_.push_back(0);
    front_.push_back(0);
    return static_cast<int>(begin_.size()) - 1;
  }

  void refine(int pivot, std::span<const int> marked) {
    int own = part_[pivot];
    touched_.clear();
    for (int y : marked) {
      int p = part_[y];
      if (p == own) continue;
      if (marks_[p] == 0) {
        touched_.push_back(p);
        bool before = begin_[own] < begin_[p];
        switch (mode_) {
          case Mode::Unordered: front_[p] = 0; break;
          case Mode::Ordered: front_[p] = !before; break;
          case Mode::OrderedComplement: front_[p] = before; break;
        }
      }
      int slot = front_[p] ? begin_[p] + marks_[p] : end_[p] - 1 - marks_[p];
      int other = elems_[slot];
      std::swap(elems_[slot], elems_[pos_[y]]);
      pos_[other] = pos_[y];
      pos_[y] = slot;
      ++marks_[p];
    }
    for (int p : touched_) {
      int cnt = marks_[p];
      marks_[p] = 0;
      if (cnt == end_[p] - begin_[p]) continue;
      int q;
      if (front_[p]) {
        q = new_part(begin_[p], begin_[p] + cnt);
        begin_[p] += cnt;
      } else {
        q = new_part(end_[p] - cnt, end_[p]);
        end_[p] -= cnt;
      }
      for (int i = begin_[q]; i < end_[q]; ++i) part_[elems_[i]] = q;
      if (!pivoted_[p]) {
        fresh_->push_back(q);
        continue;
      }
      pivoted_[q] = 1;
      int small = (end_[q] - begin_[q]) <= (end_[p] - begin_[p]) ? q : p;
      events_.emplace_back(elems_.begin() + begin_[small], elems_.begin() + end_[small]);
    }
  }

  void drain_events() {
    while (!events_.empty()) {
      std::vector<int> s = std::move(events_.back());
      events_.pop_back();
      for (int x : s) refine(x, g_.adj(x));
      // neighbours of s re-split the pieces of s
      ++round_;
      std::vector<int> ys;
      for (int x : s)
        for (int y : g_.adj(x)) {
          if (stamp_[y] != round_) stamp_[y] = round_, bucket_[y] = 0, ys.push_back(y);
          ++bucket_[y];
        }
      std::vector<int> start(ys.size() + 1, 0);
      for (std::size_t i = 0; i < ys.size(); ++i) {
        start[i + 1] = start[i] + bucket_[ys[i]];
        bucket_[ys[i]] = static_cast<int>(i);
      }
      std::vector<int> fill(start.begin(), start.end() - 1), flat(start.back());
      for (int x : s)
        for (int y : g_.adj(x)) flat[fill[bucket_[y]]++] = x;
      for (std::size_t i = 0; i < ys.size(); ++i)
        refine(ys[i], std::span<const int>(flat.data() + start[i], flat.data() + start[i + 1]));
    }
  }

  const Graph& g_;
  Mode mode_;
  std::vector<int> elems_, pos_, part_;
  std::vector<int> begin_, end_, marks_;
  std::vector<char> pivoted_, front_;
  std::vector<int> touched_;
  std::vector<std::vector<int>> events_;
  std::vector<int> bucket_, stamp_;
  int round_ = 0;
  std::deque<int>* fresh_ = nullptr;
};

}  // namespace modo::detail
