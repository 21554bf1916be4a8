// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Text and JSON surfaces: algebra descriptors, named rule sources,
// derivation files, and machine-readable reports.

#ifndef PI2_IO_HPP
#define PI2_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "pi2/algebra.hpp"
#include "pi2/decide.hpp"
#include "pi2/proofcheck.hpp"
#include "pi2/semantics.hpp"
#include "pi2/symbolic.hpp"
#include "pi2/syntax.hpp"

namespace pi2 {

// Malformed input file or descriptor.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "chain:N", "product:chain:N,chain:M,...", or "table:<path>" where the file
// holds {"elements": [names], "leq": [[i, j], ...]}.
FiniteGodelAlgebra parse_algebra_descriptor(std::string_view descriptor);

// Table description from its JSON text.
TableDescription parse_table_json(std::string_view json_text);

// Rule text, or one of the shorthands @density, @rho:N, @lambda:K,
// @lambda-axiom:K, @prelinearity. @lambda:K denotes the same axiom as
// @lambda-axiom:K.
Pi2Rule resolve_rule_source(std::string_view source);

struct DerivationFile {
  RuleSet rules;
  Derivation derivation;
};

// Derivation interchange format; see docs/derivation-format.md.
DerivationFile parse_derivation_json(std::string_view json_text);

std::string valuation_text(const FiniteGodelAlgebra& alg, const Valuation& v);

// JSON renderings. Keys are emitted in a fixed order so that identical
// inputs give byte-identical output.
std::string verdict_json(const Verdict& v);
std::string spectrum_json(const Spectrum& s, int max_explicit);
std::string check_json(const FiniteGodelAlgebra& alg, const Pi2Rule& rule, const RuleCheckResult& r);
std::string report_json(const CheckReport& r);

}  // namespace pi2

#endif  // PI2_IO_HPP
