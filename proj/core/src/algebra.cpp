// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pi2/algebra.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>

namespace pi2 {

const char* to_string(AlgebraErrorKind k) {
  switch (k) {
    case AlgebraErrorKind::InvalidArgument: return "InvalidArgument";
    case AlgebraErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case AlgebraErrorKind::NotALattice: return "NotALattice";
    case AlgebraErrorKind::NotDistributive: return "NotDistributive";
    case AlgebraErrorKind::NoResiduation: return "NoResiduation";
    case AlgebraErrorKind::NotPrelinear: return "NotPrelinear";
    case AlgebraErrorKind::NotAnEmbedding: return "NotAnEmbedding";
    case AlgebraErrorKind::NotLinear: return "NotLinear";
  }
  return "?";
}

AlgebraError::AlgebraError(AlgebraErrorKind kind, const std::string& what,
                           std::vector<std::string> witnesses)
    : std::invalid_argument(std::string(to_string(kind)) + ": " + what),
      kind_(kind),
      witnesses_(std::move(witnesses)) {}

UnboundVariable::UnboundVariable(const std::string& name)
    : std::out_of_range("unbound variable '" + name + "'"), name_(name) {}

void FiniteGodelAlgebra::resize(std::size_t n) {
  labels_.resize(n);
  leq_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  imp_.assign(n * n, 0);
}

std::optional<Element> FiniteGodelAlgebra::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

std::string FiniteGodelAlgebra::descriptor() const {
  switch (kind_) {
    case AlgebraKind::Chain:
      return "chain:" + std::to_string(size());
    case AlgebraKind::Product: {
      std::string s = "product:";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ',';
        s += factors_[i].descriptor();
      }
      return s;
    }
    case AlgebraKind::Table:
      return "table";
  }
  return "table";
}

bool FiniteGodelAlgebra::is_linear() const {
  const auto n = static_cast<Element>(size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (!leq(a, b) && !leq(b, a)) return false;
    }
  }
  return true;
}

FiniteGodelAlgebra make_chain(int n) {
  if (n < 2) {
    throw AlgebraError(AlgebraErrorKind::InvalidArgument,
                       "chain size must be at least 2, got " + std::to_string(n));
  }
  FiniteGodelAlgebra a;
  a.kind_ = AlgebraKind::Chain;
  a.resize(static_cast<std::size_t>(n));
  a.bottom_ = 0;
  a.top_ = n - 1;
  for (Element i = 0; i < n; ++i) {
    a.labels_[static_cast<std::size_t>(i)] = std::to_string(i);
    for (Element j = 0; j < n; ++j) {
      const auto k = a.index(i, j);
      a.leq_[k] = i <= j;
      a.meet_[k] = std::min(i, j);
      a.join_[k] = std::max(i, j);
      a.imp_[k] = i <= j ? n - 1 : j;
    }
  }
  return a;
}

FiniteGodelAlgebra make_product(std::span<const FiniteGodelAlgebra> factors) {
  if (factors.empty()) {
    throw AlgebraError(AlgebraErrorKind::InvalidArgument, "product needs at least one factor");
  }
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.size();

  FiniteGodelAlgebra a;
  a.kind_ = AlgebraKind::Product;
  a.factors_.assign(factors.begin(), factors.end());
  a.resize(n);

  const std::size_t k = factors.size();
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k - 1; i-- > 0;) stride[i] = stride[i + 1] * factors[i + 1].size();

  auto coord = [&](std::size_t e, std::size_t i) {
    return static_cast<Element>((e / stride[i]) % factors[i].size());
  };
  auto combine = [&](std::size_t x, std::size_t y, auto op) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i) {
      r += static_cast<std::size_t>(op(factors[i], coord(x, i), coord(y, i))) * stride[i];
    }
    return static_cast<Element>(r);
  };

  std::size_t bottom = 0, top = 0;
  for (std::size_t i = 0; i < k; ++i) {
    bottom += static_cast<std::size_t>(factors[i].bottom()) * stride[i];
    top += static_cast<std::size_t>(factors[i].top()) * stride[i];
  }
  a.bottom_ = static_cast<Element>(bottom);
  a.top_ = static_cast<Element>(top);

  for (std::size_t x = 0; x < n; ++x) {
    std::string label = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) label += ',';
      label += factors[i].label(coord(x, i));
    }
    a.labels_[x] = label + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto idx = x * n + y;
      bool le = true;
      for (std::size_t i = 0; i < k && le; ++i) le = factors[i].leq(coord(x, i), coord(y, i));
      a.leq_[idx] = le;
      a.meet_[idx] = combine(x, y, [](const FiniteGodelAlgebra& f, Element u, Element v) { return f.meet(u, v); });
      a.join_[idx] = combine(x, y, [](const FiniteGodelAlgebra& f, Element u, Element v) { return f.join(u, v); });
      a.imp_[idx] = combine(x, y, [](const FiniteGodelAlgebra& f, Element u, Element v) { return f.imp(u, v); });
    }
  }
  return a;
}

FiniteGodelAlgebra from_leq_matrix(std::vector<std::string> labels, std::vector<char> leq) {
  const std::size_t n = labels.size();
  if (n < 2) {
    throw AlgebraError(AlgebraErrorKind::InvalidArgument, "algebra needs at least 2 elements");
  }
  if (leq.size() != n * n) {
    throw AlgebraError(AlgebraErrorKind::InvalidArgument, "order matrix has wrong size");
  }
  auto le = [&](std::size_t a, std::size_t b) { return leq[a * n + b] != 0; };
  auto name = [&](std::size_t a) { return labels[a]; };

  for (std::size_t a = 0; a < n; ++a) {
    if (!le(a, a)) throw AlgebraError(AlgebraErrorKind::NotAPartialOrder, "not reflexive at " + name(a), {name(a)});
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && le(a, b) && le(b, a)) {
        throw AlgebraError(AlgebraErrorKind::NotAPartialOrder,
                           "antisymmetry fails for " + name(a) + ", " + name(b), {name(a), name(b)});
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (le(a, b) && le(b, c) && !le(a, c)) {
          throw AlgebraError(AlgebraErrorKind::NotAPartialOrder, "not transitive at " + name(a) + ", " + name(b) + ", " + name(c),
                             {name(a), name(b), name(c)});
        }
      }
    }
  }

  FiniteGodelAlgebra alg;
  alg.kind_ = AlgebraKind::Table;
  alg.resize(n);
  alg.labels_ = std::move(labels);
  alg.leq_ = std::move(leq);
  const auto& L = alg.labels_;

  // Greatest lower / least upper bounds.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> glb, lub;
      for (std::size_t c = 0; c < n; ++c) {
        if (alg.leq_[c * n + a] && alg.leq_[c * n + b]) {
          if (!glb || alg.leq_[*glb * n + c]) glb = c;
        }
        if (alg.leq_[a * n + c] && alg.leq_[b * n + c]) {
          if (!lub || alg.leq_[c * n + *lub]) lub = c;
        }
      }
      // The candidate must dominate every lower bound (resp. be dominated).
      for (std::size_t c = 0; c < n && glb; ++c) {
        if (alg.leq_[c * n + a] && alg.leq_[c * n + b] && !alg.leq_[c * n + *glb]) glb.reset();
      }
      for (std::size_t c = 0; c < n && lub; ++c) {
        if (alg.leq_[a * n + c] && alg.leq_[b * n + c] && !alg.leq_[*lub * n + c]) lub.reset();
      }
      if (!glb) throw AlgebraError(AlgebraErrorKind::NotALattice, "no meet of " + L[a] + " and " + L[b], {L[a], L[b]});
      if (!lub) throw AlgebraError(AlgebraErrorKind::NotALattice, "no join of " + L[a] + " and " + L[b], {L[a], L[b]});
      alg.meet_[a * n + b] = static_cast<Element>(*glb);
      alg.join_[a * n + b] = static_cast<Element>(*lub);
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    bool is_bottom = true, is_top = true;
    for (std::size_t b = 0; b < n; ++b) {
      is_bottom = is_bottom && alg.leq_[a * n + b];
      is_top = is_top && alg.leq_[b * n + a];
    }
    if (is_bottom) alg.bottom_ = static_cast<Element>(a);
    if (is_top) alg.top_ = static_cast<Element>(a);
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto A = static_cast<Element>(a), B = static_cast<Element>(b), C = static_cast<Element>(c);
        if (alg.meet(A, alg.join(B, C)) != alg.join(alg.meet(A, B), alg.meet(A, C))) {
          throw AlgebraError(AlgebraErrorKind::NotDistributive,
                             "a∧(b∨c) ≠ (a∧b)∨(a∧c) for a=" + L[a] + ", b=" + L[b] + ", c=" + L[c],
                             {L[a], L[b], L[c]});
        }
      }
    }
  }

  // b→c is the greatest a with a∧b ≤ c.
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = 0; c < n; ++c) {
      std::optional<Element> best;
      for (std::size_t a = 0; a < n; ++a) {
        const auto A = static_cast<Element>(a);
        if (alg.leq(alg.meet(A, static_cast<Element>(b)), static_cast<Element>(c)) && (!best || alg.leq(*best, A))) best = A;
      }
      bool greatest = best.has_value();
      for (std::size_t a = 0; a < n && greatest; ++a) {
        const auto A = static_cast<Element>(a);
        if (alg.leq(alg.meet(A, static_cast<Element>(b)), static_cast<Element>(c)) && !alg.leq(A, *best)) greatest = false;
      }
      if (!greatest) {
        throw AlgebraError(AlgebraErrorKind::NoResiduation, "no relative pseudocomplement " + L[b] + "→" + L[c],
                           {L[b], L[c]});
      }
      alg.imp_[b * n + c] = *best;
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto A = static_cast<Element>(a), B = static_cast<Element>(b);
      const Element v = alg.join(alg.imp(A, B), alg.imp(B, A));
      if (v != alg.top()) {
        throw AlgebraError(AlgebraErrorKind::NotPrelinear,
                           "(a→b)∨(b→a) = " + L[static_cast<std::size_t>(v)] + " for a=" + L[a] + ", b=" + L[b],
                           {L[a], L[b]});
      }
    }
  }
  return alg;
}

FiniteGodelAlgebra from_table(const TableDescription& d) {
  const std::size_t n = d.elements.size();
  {
    std::set<std::string> seen;
    for (const auto& e : d.elements) {
      if (!seen.insert(e).second) {
        throw AlgebraError(AlgebraErrorKind::InvalidArgument, "duplicate element name '" + e + "'", {e});
      }
    }
  }
  std::vector<char> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [i, j] : d.leq) {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n) {
      throw AlgebraError(AlgebraErrorKind::InvalidArgument,
                         "order pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    leq[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = 1;
      }
    }
  }
  return from_leq_matrix(d.elements, std::move(leq));
}

Element eval_term(const FiniteGodelAlgebra& alg, const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case NodeKind::Var: {
      auto it = v.find(f.name());
      if (it == v.end()) throw UnboundVariable(f.name());
      if (!alg.contains(it->second)) {
        throw AlgebraError(AlgebraErrorKind::InvalidArgument,
                           "valuation maps " + f.name() + " outside the carrier");
      }
      return it->second;
    }
    case NodeKind::Bot:
      return alg.bottom();
    case NodeKind::Top:
      return alg.top();
    case NodeKind::And:
      return alg.meet(eval_term(alg, f.left(), v), eval_term(alg, f.right(), v));
    case NodeKind::Or:
      return alg.join(eval_term(alg, f.left(), v), eval_term(alg, f.right(), v));
    case NodeKind::Imp:
      return alg.imp(eval_term(alg, f.left(), v), eval_term(alg, f.right(), v));
  }
  return alg.bottom();
}

bool holds_identity(const FiniteGodelAlgebra& alg, const Formula& f) {
  const VarSet vs = variables(f);
  const std::vector<std::string> order(vs.begin(), vs.end());
  const TermProgram prog(f, order);
  std::vector<Element> values(order.size(), 0);
  const auto n = static_cast<Element>(alg.size());
  while (true) {
    if (prog.eval(alg, values) != alg.top()) return false;
    std::size_t i = values.size();
    while (i > 0 && ++values[i - 1] == n) values[--i] = 0;
    if (i == 0) return true;
  }
}

namespace {

// Subsets of the carrier as bitsets over 64-bit words.
using Bits = std::vector<std::uint64_t>;

bool test(const Bits& s, Element e) { return (s[static_cast<std::size_t>(e) / 64] >> (e % 64)) & 1U; }
void set(Bits& s, Element e) { s[static_cast<std::size_t>(e) / 64] |= std::uint64_t{1} << (e % 64); }

// Closes a pairwise-comparable set under implication. Returns false if the
// closure stops being a chain. Meets and joins of comparable elements are
// already members.
bool close_chain(const FiniteGodelAlgebra& alg, Bits& s, std::vector<Element>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (auto [a, b] : {std::pair{members[i], members[j]}, std::pair{members[j], members[i]}}) {
        const Element c = alg.imp(a, b);
        if (test(s, c)) continue;
        for (Element m : members) {
          if (!alg.leq(m, c) && !alg.leq(c, m)) return false;
        }
        set(s, c);
        members.push_back(c);
      }
    }
  }
  return true;
}

}  // namespace

int chain_bound(const FiniteGodelAlgebra& alg) {
  const auto n = static_cast<Element>(alg.size());
  const std::size_t words = (alg.size() + 63) / 64;

  Bits start(words, 0);
  std::vector<Element> members{alg.bottom(), alg.top()};
  set(start, alg.bottom());
  set(start, alg.top());
  close_chain(alg, start, members);

  std::set<Bits> visited;
  int best = 0;
  std::function<void(const Bits&, const std::vector<Element>&)> grow = [&](const Bits& s, const std::vector<Element>& m) {
    if (!visited.insert(s).second) return;
    best = std::max(best, static_cast<int>(m.size()));
    for (Element x = 0; x < n; ++x) {
      if (test(s, x)) continue;
      bool comparable = true;
      for (Element y : m) {
        if (!alg.leq(x, y) && !alg.leq(y, x)) {
          comparable = false;
          break;
        }
      }
      if (!comparable) continue;
      Bits next = s;
      std::vector<Element> next_members = m;
      set(next, x);
      next_members.push_back(x);
      if (close_chain(alg, next, next_members)) grow(next, next_members);
    }
  };
  grow(start, members);
  return best;
}

void check_embedding(const EmbeddingMap& e) {
  const auto& src = e.source;
  const auto& dst = e.target;
  if (e.map.size() != src.size()) {
    throw AlgebraError(AlgebraErrorKind::NotAnEmbedding,
                       "map has " + std::to_string(e.map.size()) + " entries for a source of size " +
                           std::to_string(src.size()));
  }
  const auto n = static_cast<Element>(src.size());
  for (Element a = 0; a < n; ++a) {
    if (!dst.contains(e.map[static_cast<std::size_t>(a)])) {
      throw AlgebraError(AlgebraErrorKind::NotAnEmbedding, "image of " + src.label(a) + " is not a target element",
                         {src.label(a)});
    }
  }
  auto f = [&](Element a) { return e.map[static_cast<std::size_t>(a)]; };
  if (f(src.bottom()) != dst.bottom()) {
    throw AlgebraError(AlgebraErrorKind::NotAnEmbedding, "bottom is not preserved", {src.label(src.bottom())});
  }
  if (f(src.top()) != dst.top()) {
    throw AlgebraError(AlgebraErrorKind::NotAnEmbedding, "top is not preserved", {src.label(src.top())});
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const std::vector<std::string> pair{src.label(a), src.label(b)};
      if (a != b && f(a) == f(b)) {
        throw AlgebraError(AlgebraErrorKind::NotAnEmbedding, "not injective on " + pair[0] + ", " + pair[1], pair);
      }
      if (f(src.meet(a, b)) != dst.meet(f(a), f(b))) {
        throw AlgebraError(AlgebraErrorKind::NotAnEmbedding, "meet not preserved on " + pair[0] + ", " + pair[1], pair);
      }
      if (f(src.join(a, b)) != dst.join(f(a), f(b))) {
        throw AlgebraError(AlgebraErrorKind::NotAnEmbedding, "join not preserved on " + pair[0] + ", " + pair[1], pair);
      }
      if (f(src.imp(a, b)) != dst.imp(f(a), f(b))) {
        throw AlgebraError(AlgebraErrorKind::NotAnEmbedding,
                           "implication not preserved on " + pair[0] + ", " + pair[1], pair);
      }
    }
  }
}

namespace {

bool covers(const FiniteGodelAlgebra& alg, Element a, Element b) {
  if (a == b || !alg.leq(a, b)) return false;
  const auto n = static_cast<Element>(alg.size());
  for (Element c = 0; c < n; ++c) {
    if (c != a && c != b && alg.leq(a, c) && alg.leq(c, b)) return false;
  }
  return true;
}

}  // namespace

bool is_cover_preserving_embedding(const EmbeddingMap& e) {
  if (!e.source.is_linear()) throw AlgebraError(AlgebraErrorKind::NotLinear, "source algebra is not linear");
  if (!e.target.is_linear()) throw AlgebraError(AlgebraErrorKind::NotLinear, "target algebra is not linear");
  check_embedding(e);
  const auto n = static_cast<Element>(e.source.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (covers(e.source, a, b) &&
          !covers(e.target, e.map[static_cast<std::size_t>(a)], e.map[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
  }
  return true;
}

TermProgram::TermProgram(const Formula& f, const std::vector<std::string>& variable_order) {
  std::size_t depth = 0;
  std::function<void(const Formula&)> emit = [&](const Formula& g) {
    if (g.is_binary()) {
      emit(g.left());
      emit(g.right());
      code_.push_back({g.kind(), 0});
      --depth;
      return;
    }
    int slot = -1;
    if (g.is_var()) {
      auto it = std::find(variable_order.begin(), variable_order.end(), g.name());
      if (it == variable_order.end()) throw UnboundVariable(g.name());
      slot = static_cast<int>(it - variable_order.begin());
    }
    code_.push_back({g.kind(), slot});
    max_stack_ = std::max(max_stack_, ++depth);
  };
  emit(f);
}

Element TermProgram::eval(const FiniteGodelAlgebra& alg, std::span<const Element> values) const {
  constexpr std::size_t kInline = 64;
  std::array<Element, kInline> small{};
  std::vector<Element> large;
  Element* stack = small.data();
  if (max_stack_ > kInline) {
    large.resize(max_stack_);
    stack = large.data();
  }
  std::size_t sp = 0;
  for (const Instr& in : code_) {
    switch (in.op) {
      case NodeKind::Var:
        stack[sp++] = values[static_cast<std::size_t>(in.arg)];
        break;
      case NodeKind::Bot:
        stack[sp++] = alg.bottom();
        break;
      case NodeKind::Top:
        stack[sp++] = alg.top();
        break;
      case NodeKind::And:
        --sp;
        stack[sp - 1] = alg.meet(stack[sp - 1], stack[sp]);
        break;
      case NodeKind::Or:
        --sp;
        stack[sp - 1] = alg.join(stack[sp - 1], stack[sp]);
        break;
      case NodeKind::Imp:
        --sp;
        stack[sp - 1] = alg.imp(stack[sp - 1], stack[sp]);
        break;
    }
  }
  return stack[0];
}

}  // namespace pi2
