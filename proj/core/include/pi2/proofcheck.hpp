// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Checker for Hilbert-style derivations of Π₂-judgments ∀F. Γ ⊢ φ in
// L ⊕ Σ, where L is IPC or LC and Σ is a finite list of named Π₂-rules.
//
// A step is one of
//   - an instance of a context premise, with the context's bound variables
//     replaced by formulas that do not mention bound variables;
//   - an instance of an axiom schema;
//   - modus ponens;
//   - an application of a Σ-rule, whose bound variables are instantiated
//     by eigenvariables: pairwise distinct, not free in Γ, absent from the
//     goal and from the images of the rule's free variables.

#ifndef PI2_PROOFCHECK_HPP
#define PI2_PROOFCHECK_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pi2/algebra.hpp"
#include "pi2/syntax.hpp"

namespace pi2 {

enum class BaseLogic { IPC, LC };

const char* to_string(BaseLogic b);

struct NamedRule {
  std::string name;
  Pi2Rule rule;
};

class RuleSet {
 public:
  // Throws std::invalid_argument on duplicate names.
  RuleSet(BaseLogic base, std::vector<NamedRule> sigma = {});

  BaseLogic base() const { return base_; }
  const std::vector<NamedRule>& sigma() const { return sigma_; }
  const NamedRule* find(const std::string& name) const;

 private:
  BaseLogic base_;
  std::vector<NamedRule> sigma_;
};

// Schema ids in matching order. Metavariables are A, B, C.
//   K        A -> (B -> A)
//   S        (A -> (B -> C)) -> ((A -> B) -> (A -> C))
//   AND1     A & B -> A
//   AND2     A & B -> B
//   AND3     A -> (B -> A & B)
//   OR1      A -> A | B
//   OR2      B -> A | B
//   OR3      (A -> C) -> ((B -> C) -> (A | B -> C))
//   EFQ      0 -> A
//   IMP-DIST (A -> B) -> ((A -> (B -> C)) -> (A -> C))
//   TOP      1
//   LC       (A -> B) | (B -> A)          (LC only)
const std::vector<std::string>& axiom_schema_ids();
// Throws std::out_of_range for an unknown id.
const Formula& axiom_schema(const std::string& id);

// First schema f instantiates, if any.
std::optional<std::string> match_axiom(const Formula& f);
// Metavariable assignment under which schema `id` yields f.
std::optional<Substitution> match_schema(const std::string& id, const Formula& f);

struct PremiseInstance {
  std::size_t index = 0;
  Substitution subst;  // domain ⊆ the context's bound variables
};

struct AxiomInstance {
  std::string schema;
  // Metavariable assignment; unmapped metavariables stay as variables.
  // Ignored when `formula` is set, which is then matched against the schema.
  Substitution instance;
  std::optional<Formula> formula;
};

struct ModusPonens {
  std::size_t minor = 0;  // A
  std::size_t major = 0;  // A → B
};

struct SigmaApplication {
  std::string rule;
  Substitution subst;                          // on the rule's free variables
  std::vector<std::size_t> premises;           // one step per rule premise
  std::map<std::string, std::string> fresh;    // rule bound variable ↦ eigenvariable
};

struct Step {
  std::variant<PremiseInstance, AxiomInstance, ModusPonens, SigmaApplication> body;
  // Optional claimed formula; must equal the computed one.
  std::optional<Formula> formula;
};

struct Derivation {
  // Judgment being established: premises Γ, bound set F, goal φ.
  Pi2Rule context;
  std::vector<Step> steps;
};

enum class CheckError {
  BadReference,
  NotAnAxiomInstance,
  MPMismatch,
  UnknownSigmaRule,
  PremiseShapeMismatch,
  EigenvariableViolation,
  IllegalSubstitution,
  GoalMismatch,
};

const char* to_string(CheckError e);

enum class StepStatus { Ok, Failed, Unchecked };

struct StepResult {
  StepStatus status = StepStatus::Unchecked;
  std::optional<Formula> formula;
};

struct Failure {
  // Index of the failing step; absent for a goal mismatch.
  std::optional<std::size_t> step;
  CheckError error;
  std::string reason;
};

struct CheckReport {
  bool accepted = false;
  std::vector<StepResult> steps;
  std::optional<Failure> failure;
};

// Verifies every step in order and stops at the first failure; later steps
// are reported Unchecked.
CheckReport check_derivation(const RuleSet& rs, const Derivation& d);

// For every algebra that validates the base logic and all of Σ, the context
// judgment holds as a Π₂-rule. Algebras failing that filter are skipped.
// Throws std::invalid_argument if d is not accepted by check_derivation.
bool soundness_probe(const RuleSet& rs, const Derivation& d, std::span<const FiniteGodelAlgebra> algebras);

}  // namespace pi2

#endif  // PI2_PROOFCHECK_HPP
