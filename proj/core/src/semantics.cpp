// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pi2/semantics.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace pi2 {

namespace {

struct CompiledRule {
  std::vector<std::string> order;  // free variables then bound variables
  std::size_t free_count = 0;
  std::vector<TermProgram> premises;
  std::optional<TermProgram> conclusion;
};

CompiledRule compile(const Pi2Rule& rule) {
  CompiledRule c;
  c.order = rule.free_variables();
  c.free_count = c.order.size();
  c.order.insert(c.order.end(), rule.bound().begin(), rule.bound().end());
  for (const auto& p : rule.premises()) c.premises.emplace_back(p, c.order);
  c.conclusion.emplace(rule.conclusion(), c.order);
  return c;
}

// Increments the digits in [begin, end) as a mixed-radix counter with the
// first digit most significant. Returns false on wrap-around.
bool advance(std::vector<Element>& digits, std::size_t begin, std::size_t end, Element radix) {
  for (std::size_t i = end; i > begin; --i) {
    if (++digits[i - 1] < radix) return true;
    digits[i - 1] = 0;
  }
  return false;
}

bool premises_hold_for_all_extensions(const FiniteGodelAlgebra& alg, const CompiledRule& c,
                                      std::vector<Element>& values) {
  const auto n = static_cast<Element>(alg.size());
  std::fill(values.begin() + static_cast<std::ptrdiff_t>(c.free_count), values.end(), 0);
  do {
    for (const auto& p : c.premises) {
      if (p.eval(alg, values) != alg.top()) return false;
    }
  } while (advance(values, c.free_count, values.size(), n));
  return true;
}

// Position of the first counterexample with outer index in [lo, hi), or
// std::nullopt. Outer index encodes the free-variable valuation.
std::optional<std::uint64_t> first_counterexample(const FiniteGodelAlgebra& alg, const CompiledRule& c,
                                                  std::uint64_t lo, std::uint64_t hi) {
  const auto n = static_cast<std::uint64_t>(alg.size());
  std::vector<Element> values(c.order.size(), 0);
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = c.free_count; i > 0; --i) {
      values[i - 1] = static_cast<Element>(rest % n);
      rest /= n;
    }
    if (c.conclusion->eval(alg, values) == alg.top()) continue;
    if (premises_hold_for_all_extensions(alg, c, values)) return idx;
  }
  return std::nullopt;
}

Valuation decode(const FiniteGodelAlgebra& alg, const CompiledRule& c, std::uint64_t idx) {
  const auto n = static_cast<std::uint64_t>(alg.size());
  Valuation v;
  for (std::size_t i = c.free_count; i > 0; --i) {
    v[c.order[i - 1]] = static_cast<Element>(idx % n);
    idx /= n;
  }
  return v;
}

}  // namespace

RuleCheckResult rule_holds(const FiniteGodelAlgebra& alg, const Pi2Rule& rule, const ExecutionOptions& options) {
  const CompiledRule c = compile(rule);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.free_count; ++i) total *= alg.size();

  std::optional<std::uint64_t> found;
  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  if (threads <= 1) {
    found = first_counterexample(alg, c, 0, total);
  } else {
    std::vector<std::optional<std::uint64_t>> hits(threads);
    {
      std::vector<std::jthread> workers;
      const std::uint64_t chunk = (total + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
        workers.emplace_back([&, t, lo, hi] { hits[t] = lo < hi ? first_counterexample(alg, c, lo, hi) : std::nullopt; });
      }
    }
    for (const auto& h : hits) {
      if (h && (!found || *h < *found)) found = h;
    }
  }

  RuleCheckResult r;
  if (found) {
    r.holds = false;
    r.counterexample = decode(alg, c, *found);
  }
  return r;
}

bool replays_as_counterexample(const FiniteGodelAlgebra& alg, const Pi2Rule& rule, const Valuation& v) {
  const CompiledRule c = compile(rule);
  std::vector<Element> values(c.order.size(), 0);
  for (std::size_t i = 0; i < c.free_count; ++i) {
    auto it = v.find(c.order[i]);
    if (it == v.end() || !alg.contains(it->second)) return false;
    values[i] = it->second;
  }
  if (c.conclusion->eval(alg, values) == alg.top()) return false;
  return premises_hold_for_all_extensions(alg, c, values);
}

Pi2Rule make_density() {
  const Formula g = Formula::var("g"), p = Formula::var("p"), q = Formula::var("q"),
                c = Formula::var("c"), r = Formula::var("r");
  Formula premise = Formula::imp(
      g, Formula::disj(Formula::disj(Formula::imp(p, r), Formula::imp(r, q)), c));
  Formula conclusion = Formula::imp(g, Formula::disj(Formula::imp(p, q), c));
  return Pi2Rule({premise}, conclusion, {"r"});
}

namespace {

Formula indexed(int i) { return Formula::var("p" + std::to_string(i)); }

}  // namespace

Pi2Rule make_rho(int n) {
  if (n < 1) throw std::invalid_argument("rho index must be at least 1, got " + std::to_string(n));
  Formula lhs = Formula::slash(Formula::bot(), indexed(1));
  for (int i = 2; i <= n; ++i) lhs = Formula::conj(lhs, Formula::slash(indexed(i - 1), indexed(i)));
  Formula rhs = indexed(1);
  for (int i = 2; i <= n; ++i) rhs = Formula::disj(rhs, indexed(i));
  const Formula p = Formula::var("p");
  rhs = Formula::disj(rhs, p);
  std::vector<std::string> bound;
  for (int i = 1; i <= n; ++i) bound.push_back("p" + std::to_string(i));
  return Pi2Rule({Formula::imp(lhs, rhs)}, p, bound);
}

Formula make_lambda(int k) {
  if (k < 2) throw std::invalid_argument("lambda index must be at least 2, got " + std::to_string(k));
  Formula acc = Formula::neg(indexed(1));
  for (int i = 2; i <= k - 1; ++i) acc = Formula::disj(acc, Formula::imp(indexed(i), indexed(i - 1)));
  return Formula::disj(acc, indexed(k - 1));
}

Pi2Rule make_lambda_axiom(int k) { return Pi2Rule({}, make_lambda(k)); }

Pi2Rule make_prelinearity() {
  const Formula p = Formula::var("p"), q = Formula::var("q");
  return Pi2Rule({}, Formula::disj(Formula::imp(p, q), Formula::imp(q, p)));
}

}  // namespace pi2
