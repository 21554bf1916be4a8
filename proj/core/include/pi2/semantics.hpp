// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Brute-force satisfaction of Π₂-rules on finite algebras, and the named
// formulas and rules used throughout the toolkit.

#ifndef PI2_SEMANTICS_HPP
#define PI2_SEMANTICS_HPP

#include <optional>

#include "pi2/algebra.hpp"
#include "pi2/syntax.hpp"

namespace pi2 {

struct RuleCheckResult {
  bool holds = true;
  // Valuation of the free variables; present iff holds is false. Under it
  // every premise is top for every extension to the bound variables while
  // the conclusion is not top.
  std::optional<Valuation> counterexample;
};

struct ExecutionOptions {
  // Worker threads for the outer search; 0 or 1 runs inline.
  unsigned threads = 1;
};

// (A, v) ⊨ rule for every valuation v of the free variables. Valuations are
// visited in mixed-radix order over the sorted free variables (first
// variable most significant, values ascending); the reported counterexample
// is the first one in that order regardless of threading.
RuleCheckResult rule_holds(const FiniteGodelAlgebra& alg, const Pi2Rule& rule,
                           const ExecutionOptions& options = {});

// Re-checks a counterexample against the definition. Used by tests and by
// the CLI before printing.
bool replays_as_counterexample(const FiniteGodelAlgebra& alg, const Pi2Rule& rule, const Valuation& v);

// ∀r. g→((p→r)∨(r→q)∨c) ⇒ g→((p→q)∨c)
Pi2Rule make_density();

// ∀p1..pn. (0/p1 ∧ p1/p2 ∧ … ∧ p(n-1)/pn) → (p1∨…∨pn∨p) ⇒ p.   n ≥ 1.
// Fails on [m] for m ≤ n+1 and holds for m ≥ n+2.
Pi2Rule make_rho(int n);

// ¬p1 ∨ (p2→p1) ∨ … ∨ (p(k-1)→p(k-2)) ∨ p(k-1).   k ≥ 2.
// Holds on [m] exactly when m ≤ k.
Formula make_lambda(int k);

// The axiom ⇒ make_lambda(k).
Pi2Rule make_lambda_axiom(int k);

// ⇒ (p→q)∨(q→p)
Pi2Rule make_prelinearity();

}  // namespace pi2

#endif  // PI2_SEMANTICS_HPP
