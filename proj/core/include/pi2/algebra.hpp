// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Finite Gödel algebras: finite chains [n], finite products, and algebras
// given by an explicit order table. All operations are stored as
// precomputed tables indexed by element.

#ifndef PI2_ALGEBRA_HPP
#define PI2_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pi2/syntax.hpp"

namespace pi2 {

using Element = int;
using Valuation = std::map<std::string, Element>;

enum class AlgebraKind { Chain, Product, Table };

enum class AlgebraErrorKind {
  InvalidArgument,
  NotAPartialOrder,
  NotALattice,
  NotDistributive,
  NoResiduation,
  NotPrelinear,
  NotAnEmbedding,
  NotLinear,
};

const char* to_string(AlgebraErrorKind k);

class AlgebraError : public std::invalid_argument {
 public:
  AlgebraError(AlgebraErrorKind kind, const std::string& what, std::vector<std::string> witnesses = {});
  AlgebraErrorKind kind() const { return kind_; }
  // Names of the elements that witness the failure.
  const std::vector<std::string>& witnesses() const { return witnesses_; }

 private:
  AlgebraErrorKind kind_;
  std::vector<std::string> witnesses_;
};

class UnboundVariable : public std::out_of_range {
 public:
  explicit UnboundVariable(const std::string& name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class FiniteGodelAlgebra {
 public:
  std::size_t size() const { return labels_.size(); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool leq(Element a, Element b) const { return leq_[index(a, b)] != 0; }
  Element meet(Element a, Element b) const { return meet_[index(a, b)]; }
  Element join(Element a, Element b) const { return join_[index(a, b)]; }
  Element imp(Element a, Element b) const { return imp_[index(a, b)]; }

  AlgebraKind kind() const { return kind_; }
  // Product factors; empty unless kind() == Product.
  const std::vector<FiniteGodelAlgebra>& factors() const { return factors_; }
  const std::string& label(Element e) const { return labels_.at(static_cast<std::size_t>(e)); }
  // Element with the given label, if any.
  std::optional<Element> find(const std::string& label) const;
  // "chain:N", "product:chain:N,chain:M", or "table".
  std::string descriptor() const;

  bool contains(Element e) const { return e >= 0 && static_cast<std::size_t>(e) < size(); }
  bool is_linear() const;

 private:
  friend FiniteGodelAlgebra make_chain(int n);
  friend FiniteGodelAlgebra make_product(std::span<const FiniteGodelAlgebra> factors);
  friend FiniteGodelAlgebra from_leq_matrix(std::vector<std::string> labels, std::vector<char> leq);

  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b);
  }
  void resize(std::size_t n);

  AlgebraKind kind_ = AlgebraKind::Table;
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<Element> imp_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<FiniteGodelAlgebra> factors_;
};

// The n-element chain 0 < 1 < ... < n-1, with a→b = top if a ≤ b else b.
// Requires n ≥ 2.
FiniteGodelAlgebra make_chain(int n);

// Componentwise product. Elements are encoded in mixed radix, first factor
// most significant, and labelled "(a,b,...)".
FiniteGodelAlgebra make_product(std::span<const FiniteGodelAlgebra> factors);

struct TableDescription {
  std::vector<std::string> elements;
  // Pairs (i, j) meaning elements[i] ≤ elements[j]; closed reflexively and
  // transitively on construction.
  std::vector<std::pair<int, int>> leq;
};

// Validates a finite poset as a Gödel algebra and computes its operations.
// Throws AlgebraError (NotAPartialOrder, NotALattice, NotDistributive,
// NoResiduation, NotPrelinear) naming the witnessing elements.
FiniteGodelAlgebra from_table(const TableDescription& description);

// Same as from_table, starting from a full reflexive-transitive order matrix.
FiniteGodelAlgebra from_leq_matrix(std::vector<std::string> labels, std::vector<char> leq);

// Value of f under v. Throws UnboundVariable if v misses a variable of f.
Element eval_term(const FiniteGodelAlgebra& alg, const Formula& f, const Valuation& v);

// f evaluates to top under every valuation of its variables.
bool holds_identity(const FiniteGodelAlgebra& alg, const Formula& f);

// Largest chain subalgebra (contains bottom and top, pairwise comparable,
// closed under the operations).
int chain_bound(const FiniteGodelAlgebra& alg);

struct EmbeddingMap {
  FiniteGodelAlgebra source;
  FiniteGodelAlgebra target;
  std::vector<Element> map;
};

// Throws AlgebraError(NotAnEmbedding) unless e is an injective map that
// preserves bottom, top, meet, join and implication.
void check_embedding(const EmbeddingMap& e);

// Both algebras must be linear (NotLinear otherwise) and e must be an
// embedding. True iff every covering pair a ≺ b maps to a covering pair.
bool is_cover_preserving_embedding(const EmbeddingMap& e);

// Formula compiled against a fixed variable order, for the inner loops of
// the decision procedures. Evaluation is a single pass over a postfix
// program.
class TermProgram {
 public:
  TermProgram(const Formula& f, const std::vector<std::string>& variable_order);

  Element eval(const FiniteGodelAlgebra& alg, std::span<const Element> values) const;

 private:
  struct Instr {
    NodeKind op;
    int arg;  // variable slot for Var
  };
  std::vector<Instr> code_;
  std::size_t max_stack_ = 0;
};

}  // namespace pi2

#endif  // PI2_ALGEBRA_HPP
