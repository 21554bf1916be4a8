// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pi2/decide.hpp"

#include <stdexcept>

namespace pi2 {

namespace {

std::optional<int> pick_refuting_chain(const Spectrum& s) {
  for (int n = 3; n <= s.threshold; ++n) {
    if (!s.valid_at(n)) return n;
  }
  if (!s.tail) return std::max(3, s.threshold + 1);
  if (!s.valid_at(2)) return 2;
  return std::nullopt;
}

}  // namespace

Verdict decide_lc(const Pi2Rule& rule, const ExecutionOptions& options) {
  Verdict v;
  v.spectrum = chain_spectrum(rule, options);
  v.q_valid = q_valid(rule, options);
  v.derivable = v.spectrum.all_valid();
  v.admissible = v.q_valid || v.spectrum.tail;
  v.hereditarily_admissible = v.admissible;
  if (!v.derivable) v.refuting_chain = pick_refuting_chain(v.spectrum);

  if (v.derivable && !v.admissible) throw std::logic_error("derivable rule reported inadmissible");
  if (v.derivable != !v.refuting_chain.has_value()) throw std::logic_error("refuting chain inconsistent with derivability");
  return v;
}

std::string to_string(const ClassDescriptor& c) {
  std::string s = "{";
  bool first = true;
  for (int k : c.finite_generators) {
    if (!first) s += ", ";
    s += "[" + std::to_string(k) + "]";
    first = false;
  }
  if (c.include_q) s += first ? "Q" : ", Q";
  return s + "}";
}

ClassDescriptor classify_minimal(const FiniteGodelAlgebra& alg) {
  return ClassDescriptor{{chain_bound(alg)}, false};
}

Membership chain_in_class(int m, const std::set<int>& generators) {
  if (m < 2) throw std::invalid_argument("chain size must be at least 2, got " + std::to_string(m));
  for (int k : generators) {
    if (k < 2) throw std::invalid_argument("generator size must be at least 2, got " + std::to_string(k));
  }
  Membership r;
  r.member = generators.count(m) > 0;
  if (r.member) return r;
  auto it = generators.lower_bound(m);
  if (it != generators.begin()) {
    const int k = *std::prev(it);
    r.witness = make_lambda(k);
    r.witness_index = k;
  }
  return r;
}

Membership chain_in_class(int m, const ClassDescriptor& c) {
  if (c.include_q) {
    throw std::invalid_argument("membership of a finite chain in a class generated with Q is not decided");
  }
  return chain_in_class(m, c.finite_generators);
}

bool is_inductively_complete(const ClassDescriptor& c) {
  if (c.include_q) return c.finite_generators.empty();
  return c.finite_generators.size() == 1;
}

}  // namespace pi2
