// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Formulas over (∧, ∨, →, 0, 1), Π₂-rules and substitutions.
//
// Formula is an immutable, shared tree. Derived connectives (¬a and a/b)
// are expanded by the parser, so every tree is built from the five
// primitive node kinds below.

#ifndef PI2_SYNTAX_HPP
#define PI2_SYNTAX_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pi2 {

enum class NodeKind { Var, Bot, Top, And, Or, Imp };

class Formula {
 public:
  static Formula var(std::string name);
  static Formula bot();
  static Formula top();
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  // ¬a ≡ a → 0
  static Formula neg(Formula a);
  // a/b ≡ (b → a) → b
  static Formula slash(Formula a, Formula b);

  NodeKind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == NodeKind::Var; }
  bool is_binary() const;
  // Only meaningful for Var nodes.
  const std::string& name() const { return node_->name; }
  // Only meaningful for binary nodes.
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }

  std::size_t size() const { return node_->size; }
  std::size_t depth() const { return node_->depth; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  // Structural total order; used for deterministic containers.
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node {
    NodeKind kind;
    std::string name;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
    std::size_t size = 1;
    std::size_t depth = 1;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula binary(NodeKind k, Formula l, Formula r);

  std::shared_ptr<const Node> node_;
};

using VarSet = std::set<std::string>;
using Substitution = std::map<std::string, Formula>;

// Exact set of variable names occurring in f.
VarSet variables(const Formula& f);
void collect_variables(const Formula& f, VarSet& out);

// Simultaneous substitution; unmapped variables are left unchanged.
Formula apply_substitution(const Formula& f, const Substitution& s);

// Renders f in the concrete grammar with minimal parentheses.
// parse_formula(to_string(f)) == f for every f.
std::string to_string(const Formula& f);

bool is_identifier(std::string_view s);

// A Π₂-rule ∀F. Γ ⇒ ψ. Construction validates the invariants: bound
// names are distinct identifiers and none of them occurs in the conclusion.
class Pi2Rule {
 public:
  Pi2Rule(std::vector<Formula> premises, Formula conclusion,
          std::vector<std::string> bound = {});

  const std::vector<Formula>& premises() const { return premises_; }
  const Formula& conclusion() const { return conclusion_; }
  // Bound context, in declaration order.
  const std::vector<std::string>& bound() const { return bound_; }

  bool is_pi1() const { return bound_.empty(); }
  bool is_axiom() const { return premises_.empty(); }

  // Variables of premises and conclusion minus the bound context, sorted.
  std::vector<std::string> free_variables() const;
  VarSet all_variables() const;

  friend bool operator==(const Pi2Rule& a, const Pi2Rule& b);

 private:
  std::vector<Formula> premises_;
  Formula conclusion_;
  std::vector<std::string> bound_;
};

std::string to_string(const Pi2Rule& r);

// Thrown by parse_formula / parse_rule. line and column are 1-based.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::vector<std::string> expected,
              const std::string& found);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

// Raised when well-formed text violates a Pi2Rule invariant.
class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Formula parse_formula(std::string_view text);

// Rule := ("forall" ident+ ".")? (item ("," item)*)? "=>" item
// where item := formula (("<=" | "=") formula)?; `t <= s` reads as t -> s
// and `t = s` as (t -> s) & (s -> t).
Pi2Rule parse_rule(std::string_view text);

}  // namespace pi2

#endif  // PI2_SYNTAX_HPP
