// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pi2/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pi2 {

bool Formula::is_binary() const {
  switch (node_->kind) {
    case NodeKind::And:
    case NodeKind::Or:
    case NodeKind::Imp:
      return true;
    default:
      return false;
  }
}

Formula Formula::var(std::string name) {
  if (!is_identifier(name) || name == "forall") {
    throw std::invalid_argument("invalid variable name '" + name + "'");
  }
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Var;
  n->name = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::bot() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Bot;
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::top() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Top;
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::binary(NodeKind k, Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->size = 1 + l.size() + r.size();
  n->depth = 1 + std::max(l.depth(), r.depth());
  n->left = std::make_shared<const Formula>(std::move(l));
  n->right = std::make_shared<const Formula>(std::move(r));
  return Formula(std::move(n));
}

Formula Formula::conj(Formula l, Formula r) { return binary(NodeKind::And, std::move(l), std::move(r)); }
Formula Formula::disj(Formula l, Formula r) { return binary(NodeKind::Or, std::move(l), std::move(r)); }
Formula Formula::imp(Formula l, Formula r) { return binary(NodeKind::Imp, std::move(l), std::move(r)); }
Formula Formula::neg(Formula a) { return imp(std::move(a), bot()); }
Formula Formula::slash(Formula a, Formula b) { return imp(imp(b, std::move(a)), b); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case NodeKind::Var:
      return a.name() == b.name();
    case NodeKind::Bot:
    case NodeKind::Top:
      return true;
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case NodeKind::Var:
      return a.name() < b.name();
    case NodeKind::Bot:
    case NodeKind::Top:
      return false;
    default:
      if (a.left() != b.left()) return a.left() < b.left();
      return a.right() < b.right();
  }
}

void collect_variables(const Formula& f, VarSet& out) {
  switch (f.kind()) {
    case NodeKind::Var:
      out.insert(f.name());
      return;
    case NodeKind::Bot:
    case NodeKind::Top:
      return;
    default:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
  }
}

VarSet variables(const Formula& f) {
  VarSet out;
  collect_variables(f, out);
  return out;
}

Formula apply_substitution(const Formula& f, const Substitution& s) {
  switch (f.kind()) {
    case NodeKind::Var: {
      auto it = s.find(f.name());
      return it == s.end() ? f : it->second;
    }
    case NodeKind::Bot:
    case NodeKind::Top:
      return f;
    case NodeKind::And:
      return Formula::conj(apply_substitution(f.left(), s), apply_substitution(f.right(), s));
    case NodeKind::Or:
      return Formula::disj(apply_substitution(f.left(), s), apply_substitution(f.right(), s));
    case NodeKind::Imp:
      return Formula::imp(apply_substitution(f.left(), s), apply_substitution(f.right(), s));
  }
  return f;
}

namespace {

// Binding strength used by the printer: imp < or < and < atom.
enum Level { kImp = 0, kOr = 1, kAnd = 2, kAtom = 3 };

Level level_of(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Imp:
      return kImp;
    case NodeKind::Or:
      return kOr;
    case NodeKind::And:
      return kAnd;
    default:
      return kAtom;
  }
}

void print(const Formula& f, Level ctx, std::string& out) {
  const Level own = level_of(f);
  const bool parens = own < ctx;
  if (parens) out += '(';
  switch (f.kind()) {
    case NodeKind::Var:
      out += f.name();
      break;
    case NodeKind::Bot:
      out += '0';
      break;
    case NodeKind::Top:
      out += '1';
      break;
    case NodeKind::And:
      print(f.left(), kAnd, out);
      out += " & ";
      print(f.right(), kAtom, out);
      break;
    case NodeKind::Or:
      print(f.left(), kOr, out);
      out += " | ";
      print(f.right(), kAnd, out);
      break;
    case NodeKind::Imp:
      print(f.left(), kOr, out);
      out += " -> ";
      print(f.right(), kImp, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, kImp, out);
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Pi2Rule::Pi2Rule(std::vector<Formula> premises, Formula conclusion, std::vector<std::string> bound)
    : premises_(std::move(premises)), conclusion_(std::move(conclusion)), bound_(std::move(bound)) {
  std::set<std::string> seen;
  const VarSet in_conclusion = variables(conclusion_);
  for (const auto& b : bound_) {
    if (!is_identifier(b)) throw RuleError("invalid bound variable name '" + b + "'");
    if (!seen.insert(b).second) throw RuleError("duplicate bound variable '" + b + "'");
    if (in_conclusion.count(b)) throw RuleError("bound variable occurs in conclusion: " + b);
  }
}

VarSet Pi2Rule::all_variables() const {
  VarSet out;
  for (const auto& p : premises_) collect_variables(p, out);
  collect_variables(conclusion_, out);
  return out;
}

std::vector<std::string> Pi2Rule::free_variables() const {
  std::vector<std::string> out;
  const std::set<std::string> bound(bound_.begin(), bound_.end());
  for (const auto& v : all_variables()) {
    if (!bound.count(v)) out.push_back(v);
  }
  return out;
}

bool operator==(const Pi2Rule& a, const Pi2Rule& b) {
  return a.premises_ == b.premises_ && a.conclusion_ == b.conclusion_ && a.bound_ == b.bound_;
}

std::string to_string(const Pi2Rule& r) {
  std::string out;
  if (!r.bound().empty()) {
    out += "forall";
    for (const auto& b : r.bound()) out += " " + b;
    out += " . ";
  }
  for (std::size_t i = 0; i < r.premises().size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.premises()[i]);
  }
  out += r.premises().empty() ? "=> " : " => ";
  out += to_string(r.conclusion());
  return out;
}

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string s;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) s += ", ";
    s += expected[i];
  }
  return s;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                         const std::string& found)
    : std::runtime_error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
                         ": expected one of {" + join_expected(expected) + "}, found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Zero, One, LParen, RParen, Not, Slash, And, Or, Arrow, Comma, Dot, Turnstile, Leq, Eq, Forall, End };

const char* spelling(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Zero: return "'0'";
    case Tok::One: return "'1'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Not: return "'~'";
    case Tok::Slash: return "'/'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Turnstile: return "'=>'";
    case Tok::Leq: return "'<='";
    case Tok::Eq: return "'='";
    case Tok::Forall: return "'forall'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(src.substr(i, len)), line, col});
    advance(len);
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      const std::string_view word = src.substr(i, j - i);
      push(word == "forall" ? Tok::Forall : Tok::Ident, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      const std::string_view word = src.substr(i, j - i);
      if (word == "0") {
        push(Tok::Zero, 1);
      } else if (word == "1") {
        push(Tok::One, 1);
      } else {
        throw SyntaxError(line, col, {"'0'", "'1'", "identifier"}, "'" + std::string(word) + "'");
      }
      continue;
    }
    const std::string_view rest = src.substr(i);
    if (rest.starts_with("->")) { push(Tok::Arrow, 2); continue; }
    if (rest.starts_with("=>")) { push(Tok::Turnstile, 2); continue; }
    if (rest.starts_with("<=")) { push(Tok::Leq, 2); continue; }
    switch (c) {
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '~': push(Tok::Not, 1); continue;
      case '/': push(Tok::Slash, 1); continue;
      case '&': push(Tok::And, 1); continue;
      case '|': push(Tok::Or, 1); continue;
      case ',': push(Tok::Comma, 1); continue;
      case '.': push(Tok::Dot, 1); continue;
      case '=': push(Tok::Eq, 1); continue;
      default:
        break;
    }
    // Report the whole UTF-8 sequence rather than a partial byte.
    std::size_t len = 1;
    while (i + len < src.size() && (static_cast<unsigned char>(src[i + len]) & 0xC0) == 0x80) ++len;
    throw SyntaxError(line, col, {"formula"}, "'" + std::string(src.substr(i, len)) + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Formula formula_only() {
    Formula f = imp();
    expect_end();
    return f;
  }

  Pi2Rule rule() {
    std::vector<std::string> bound;
    if (peek().kind == Tok::Forall) {
      next();
      if (peek().kind != Tok::Ident) fail({Tok::Ident});
      while (peek().kind == Tok::Ident) bound.push_back(next().text);
      if (peek().kind != Tok::Dot) fail({Tok::Ident, Tok::Dot});
      next();
    }
    std::vector<Formula> premises;
    if (peek().kind != Tok::Turnstile) {
      premises.push_back(item());
      while (peek().kind == Tok::Comma) {
        next();
        premises.push_back(item());
      }
      if (peek().kind != Tok::Turnstile) {
        fail({Tok::Comma, Tok::Turnstile, Tok::Arrow, Tok::Or, Tok::And, Tok::Leq, Tok::Eq});
      }
    }
    next();
    Formula conclusion = item();
    expect_end();
    return Pi2Rule(std::move(premises), std::move(conclusion), std::move(bound));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::initializer_list<Tok> expected) const {
    std::vector<std::string> names;
    for (Tok t : expected) names.emplace_back(spelling(t));
    const Token& t = peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.line, t.column, std::move(names), found);
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail({Tok::End});
  }

  Formula item() {
    Formula lhs = imp();
    if (peek().kind == Tok::Leq) {
      next();
      return Formula::imp(lhs, imp());
    }
    if (peek().kind == Tok::Eq) {
      next();
      Formula rhs = imp();
      return Formula::conj(Formula::imp(lhs, rhs), Formula::imp(rhs, lhs));
    }
    return lhs;
  }

  Formula imp() {
    Formula lhs = disj();
    if (peek().kind == Tok::Arrow) {
      next();
      return Formula::imp(lhs, imp());
    }
    return lhs;
  }

  Formula disj() {
    Formula acc = conj();
    while (peek().kind == Tok::Or) {
      next();
      acc = Formula::disj(acc, conj());
    }
    return acc;
  }

  Formula conj() {
    Formula acc = unary();
    while (peek().kind == Tok::And) {
      next();
      acc = Formula::conj(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      next();
      return Formula::neg(unary());
    }
    Formula a = atom();
    if (peek().kind == Tok::Slash) {
      next();
      return Formula::slash(a, atom());
    }
    return a;
  }

  Formula atom() {
    switch (peek().kind) {
      case Tok::Ident:
        return Formula::var(next().text);
      case Tok::Zero:
        next();
        return Formula::bot();
      case Tok::One:
        next();
        return Formula::top();
      case Tok::LParen: {
        next();
        Formula f = imp();
        if (peek().kind != Tok::RParen) fail({Tok::RParen, Tok::Arrow, Tok::Or, Tok::And});
        next();
        return f;
      }
      default:
        fail({Tok::Ident, Tok::Zero, Tok::One, Tok::LParen, Tok::Not});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).formula_only(); }

Pi2Rule parse_rule(std::string_view text) { return Parser(text).rule(); }

}  // namespace pi2
