// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Admissibility, hereditary admissibility and derivability of Π₂-rules over
// Gödel-Dummett logic LC, and the minimal inductive classes of finite
// Gödel algebras.

#ifndef PI2_DECIDE_HPP
#define PI2_DECIDE_HPP

#include <optional>
#include <set>
#include <string>

#include "pi2/algebra.hpp"
#include "pi2/semantics.hpp"
#include "pi2/symbolic.hpp"
#include "pi2/syntax.hpp"

namespace pi2 {

struct Verdict {
  bool derivable = false;
  bool admissible = false;
  bool hereditarily_admissible = false;

  Spectrum spectrum;
  bool q_valid = false;
  // A chain size n with [n] ⊭ rule; present iff the rule is not derivable.
  // The least refuting n ≥ 3 is preferred, since a refutation on the
  // two-element Boolean algebra only shows classical invalidity; 2 is
  // reported when it is the only refuting size.
  std::optional<int> refuting_chain;
};

// Over LC a rule is derivable iff it holds on every finite chain, and
// admissible iff it holds on ℚ or on all but finitely many finite chains.
// Admissibility and hereditary admissibility coincide over LC.
Verdict decide_lc(const Pi2Rule& rule, const ExecutionOptions& options = {});

// An inductive class generated by finitely many chains [k] and optionally ℚ.
struct ClassDescriptor {
  std::set<int> finite_generators;
  bool include_q = false;

  bool empty() const { return finite_generators.empty() && !include_q; }
  friend bool operator==(const ClassDescriptor&, const ClassDescriptor&) = default;
};

std::string to_string(const ClassDescriptor& c);

// The minimal inductive class below every inductive class containing alg:
// the one generated by [chain_bound(alg)].
ClassDescriptor classify_minimal(const FiniteGodelAlgebra& alg);

struct Membership {
  bool member = false;
  // For a non-member m: λ(k*) with k* the largest generator below m. It
  // holds on every [k] with k ≤ k* and fails on [m].
  std::optional<Formula> witness;
  std::optional<int> witness_index;
};

// [m] belongs to the inductive class generated by {[k] : k ∈ X} iff m ∈ X.
// Requires m ≥ 2 and every member of X ≥ 2.
Membership chain_in_class(int m, const std::set<int>& generators);

// As above; descriptors that include ℚ are rejected, since membership of a
// finite chain in such a mixed class is not settled here.
Membership chain_in_class(int m, const ClassDescriptor& c);

// Inductively complete classes are exactly the minimal ones: a single chain
// generator, or ℚ alone.
bool is_inductively_complete(const ClassDescriptor& c);

}  // namespace pi2

#endif  // PI2_DECIDE_HPP
