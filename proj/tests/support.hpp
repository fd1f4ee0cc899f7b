// Shared helpers for the test suites: deterministic random formulas and
// frames, and a handful of fixed frames used across modules.

#ifndef SUKIT_TESTS_SUPPORT_HPP
#define SUKIT_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "su/formula.hpp"
#include "su/frame.hpp"

namespace test_support {

// Reflexive-transitive chain 0 -> 1 -> ... -> n-1.
inline su::Frame chain(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) edges.emplace_back(i, j);
  return su::Frame(n, edges);
}

// Reflexive points, no other edges.
inline su::Frame antichain(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, i);
  return su::Frame(n, edges);
}

// Root 0 sees leaves 1..n; leaves see only themselves.
inline su::Frame fork(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i <= leaves; ++i) edges.emplace_back(i, i);
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return su::Frame(leaves + 1, edges);
}

// Diamond: root 0, middle 1 and 2, top 3.
inline su::Frame diamond() {
  su::Frame f(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  return f.reflexive_transitive_closure();
}

class FormulaGen {
 public:
  explicit FormulaGen(std::uint64_t seed, std::vector<std::string> names = {"p", "q", "r"})
      : rng_(seed), names_(std::move(names)) {}

  su::Formula atom() {
    if (rng_() % 5 == 0) return su::Formula::bottom();
    return su::Formula::var(names_[rng_() % names_.size()]);
  }

  su::Formula formula(int max_depth) {
    if (max_depth == 0 || rng_() % 4 == 0) return atom();
    switch (rng_() % 4) {
      case 0: return su::Formula::conj(formula(max_depth - 1), formula(max_depth - 1));
      case 1: return su::Formula::disj(formula(max_depth - 1), formula(max_depth - 1));
      case 2: return su::Formula::neg(formula(max_depth - 1));
      default:
        return su::Formula::implies(formula(max_depth - 1), formula(max_depth - 1));
    }
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
  std::vector<std::string> names_;
};

}  // namespace test_support

#endif  // SUKIT_TESTS_SUPPORT_HPP
