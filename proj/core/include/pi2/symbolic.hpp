// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Exact validity of Π₂-rules on every finite chain at once, and on the
// dense chain ℚ (rationals with endpoints), without enumerating chains.
//
// On a chain every term value is 0, 1, or the value of some variable, so a
// valuation of the free variables matters only through its order type: an
// ordered partition of {0, free variables, 1} into blocks. Bound variables
// range over the whole chain, and b of them can occupy at most b distinct
// points inside one gap between consecutive blocks; a gap is therefore
// recorded only up to min(size, b). A Profile is an order type together
// with these capped gap sizes, and validity on [n] is validity on every
// profile that some valuation into [n] realises.

#ifndef PI2_SYMBOLIC_HPP
#define PI2_SYMBOLIC_HPP

#include <span>
#include <string>
#include <vector>

#include "pi2/algebra.hpp"
#include "pi2/semantics.hpp"
#include "pi2/syntax.hpp"

namespace pi2 {

struct Profile {
  // Number of blocks; block 0 holds the bottom marker and block
  // block_count-1 the top marker. Always ≥ 2.
  int block_count = 2;
  // Block of each free variable; every block strictly between the end
  // blocks is nonempty.
  std::vector<int> block_of;
  // Capped number of elements strictly between block i and block i+1.
  std::vector<int> caps;

  friend bool operator==(const Profile&, const Profile&) = default;
};

// All profiles for f free and b bound variables in canonical order: block
// count ascending, then block assignment, then caps (mixed radix, first
// entry most significant).
std::vector<Profile> enumerate_profiles(int free_count, int bound_count);

struct Realization {
  FiniteGodelAlgebra chain;
  Valuation valuation;
};

// Smallest chain realising p exactly: #blocks + Σcaps elements, with the
// i-th name placed at its block.
Realization realize_profile(const Profile& p, std::span<const std::string> names);

// Whether some valuation into [n] has profile p (with b bound variables).
bool is_feasible(const Profile& p, int bound_count, int n);

// (f+2) + (f+1)·b: from this size on, the set of feasible profiles no
// longer changes, so validity is constant for n ≥ threshold.
int spectrum_threshold(int free_count, int bound_count);

// Same contract as rule_holds(make_chain(n), rule).holds. Requires n ≥ 2.
bool rule_holds_on_chain_symbolic(const Pi2Rule& rule, int n, const ExecutionOptions& options = {});

struct Spectrum {
  int threshold = 2;
  // explicit_values[i] is validity on [i + 2], for i + 2 in 2..threshold.
  std::vector<bool> explicit_values;
  // Validity on every [n] with n > threshold.
  bool tail = false;

  bool valid_at(int n) const;
  // Sizes in 2..threshold at which the rule holds.
  std::vector<int> valid_sizes() const;
  // True when the rule holds on every finite chain.
  bool all_valid() const;
};

Spectrum chain_spectrum(const Pi2Rule& rule, const ExecutionOptions& options = {});

// Validity on ℚ: every profile whose gaps all have the full capacity b.
bool q_valid(const Pi2Rule& rule, const ExecutionOptions& options = {});

}  // namespace pi2

#endif  // PI2_SYMBOLIC_HPP
