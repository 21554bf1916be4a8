// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Seeded generator of small random Π₂-rules and formulas.

#ifndef PI2_TESTS_RANDOM_RULES_HPP
#define PI2_TESTS_RANDOM_RULES_HPP

#include <random>
#include <string>
#include <vector>

#include "pi2/syntax.hpp"

namespace pi2::testing {

class RuleGenerator {
 public:
  explicit RuleGenerator(std::uint32_t seed) : rng_(seed) {}

  Formula formula(const std::vector<std::string>& vars, int depth) {
    const int leaf_weight = depth <= 1 ? 1 : 0;
    if (leaf_weight || pick(6) == 0) return leaf(vars);
    const Formula l = formula(vars, depth - 1), r = formula(vars, depth - 1);
    switch (pick(3)) {
      case 0: return Formula::conj(l, r);
      case 1: return Formula::disj(l, r);
      default: return Formula::imp(l, r);
    }
  }

  // At most max_free free and max_bound bound variables, formula depth at
  // most max_depth, up to two premises.
  Pi2Rule rule(int max_free = 3, int max_bound = 2, int max_depth = 3) {
    static const std::vector<std::string> free_pool{"x", "y", "z"};
    static const std::vector<std::string> bound_pool{"u", "v"};
    const auto nf = static_cast<std::size_t>(1 + pick(max_free));
    const auto nb = static_cast<std::size_t>(pick(max_bound + 1));
    std::vector<std::string> free(free_pool.begin(), free_pool.begin() + static_cast<std::ptrdiff_t>(nf));
    std::vector<std::string> bound(bound_pool.begin(), bound_pool.begin() + static_cast<std::ptrdiff_t>(nb));
    std::vector<std::string> all = free;
    all.insert(all.end(), bound.begin(), bound.end());

    std::vector<Formula> premises;
    const int count = pick(3);
    for (int i = 0; i < count; ++i) premises.push_back(formula(all, 1 + pick(max_depth)));
    return Pi2Rule(std::move(premises), formula(free, max_depth > 1 ? 2 + pick(max_depth - 1) : 1), std::move(bound));
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

 private:
  Formula leaf(const std::vector<std::string>& vars) {
    // Constants one time in eight, or always when no variable is available.
    if (vars.empty() || pick(8) == 0) return pick(2) ? Formula::top() : Formula::bot();
    return Formula::var(vars[static_cast<std::size_t>(pick(static_cast<int>(vars.size())))]);
  }

  std::mt19937 rng_;
};

}  // namespace pi2::testing

#endif  // PI2_TESTS_RANDOM_RULES_HPP
