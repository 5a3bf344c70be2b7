#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace modo {

// Malformed input: unknown ids, non-edges, diagrams that do not realize the graph.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A legitimate negative answer. `reason` is a short machine-friendly tag,
// `witness` a human-readable detail.
struct Infeasible {
  std::string reason;
  std::string witness;
};

// Internal postcondition that stays on in release builds.
#define MODO_CHECK(cond, msg)                                         \
  do {                                                                \
    if (!(cond)) throw std::logic_error(std::string("check failed: ") + (msg)); \
  } while (0)

template <class T>
class Outcome {
 public:
  Outcome(T value) : v_(std::move(value)) {}
  Outcome(Infeasible why) : v_(std::move(why)) {}

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  T& value() { return std::get<0>(v_); }
  const T& value() const { return std::get<0>(v_); }
  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }
  T& operator*() { return value(); }
  const T& operator*() const { return value(); }

  const Infeasible& why() const { return std::get<1>(v_); }

 private:
  std::variant<T, Infeasible> v_;
};

}  // namespace modo
