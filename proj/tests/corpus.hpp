// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

// Loading the annotated derivation corpus, and the derivation transforms
// behind the metamorphic checks.

#ifndef PI2_TESTS_CORPUS_HPP
#define PI2_TESTS_CORPUS_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "pi2/io.hpp"
#include "pi2/proofcheck.hpp"

namespace pi2::corpus {

struct Item {
  std::string name;
  DerivationFile file;
  bool expect_accepted = false;
  std::optional<std::string> expect_error;
  std::optional<std::size_t> expect_step;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<Item> load(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".json") paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<Item> items;
  for (const auto& p : paths) {
    const std::string text = read_file(p);
    const auto j = nlohmann::json::parse(text);
    const auto& expect = j.at("expect");
    Item item{p.stem().string(), parse_derivation_json(text), expect.at("accepted").get<bool>(), {}, {}};
    if (expect.contains("error")) item.expect_error = expect.at("error").get<std::string>();
    if (expect.contains("step")) item.expect_step = expect.at("step").get<std::size_t>();
    items.push_back(std::move(item));
  }
  return items;
}

// Chains [2]..[5] and [2]×[2].
inline std::vector<FiniteGodelAlgebra> probe_algebras() {
  std::vector<FiniteGodelAlgebra> out;
  for (int n = 2; n <= 5; ++n) out.push_back(make_chain(n));
  const std::vector<FiniteGodelAlgebra> f{make_chain(2), make_chain(2)};
  out.push_back(make_product(f));
  return out;
}

// Every variable name mentioned anywhere in the derivation.
inline VarSet names_in(const RuleSet& rs, const Derivation& d) {
  VarSet out = d.context.all_variables();
  const auto add = [&](const Formula& f) { collect_variables(f, out); };
  const auto add_subst = [&](const Substitution& s) {
    for (const auto& [k, v] : s) {
      out.insert(k);
      add(v);
    }
  };
  for (const auto& r : rs.sigma()) {
    const VarSet v = r.rule.all_variables();
    out.insert(v.begin(), v.end());
  }
  for (const auto& step : d.steps) {
    if (step.formula) add(*step.formula);
    if (const auto* p = std::get_if<PremiseInstance>(&step.body)) add_subst(p->subst);
    if (const auto* a = std::get_if<AxiomInstance>(&step.body)) {
      add_subst(a->instance);
      if (a->formula) add(*a->formula);
    }
    if (const auto* s = std::get_if<SigmaApplication>(&step.body)) {
      add_subst(s->subst);
      for (const auto& [from, to] : s->fresh) {
        out.insert(from);
        out.insert(to);
      }
    }
  }
  return out;
}

inline std::string fresh_name(const VarSet& taken, const std::string& stem) {
  for (int i = 0;; ++i) {
    std::string name = stem + std::to_string(i);
    if (!taken.count(name)) return name;
  }
}

// Γ extended by a premise on a variable that occurs nowhere else.
inline Derivation add_unused_premise(const RuleSet& rs, const Derivation& d) {
  auto premises = d.context.premises();
  premises.push_back(Formula::var(fresh_name(names_in(rs, d), "unused")));
  return Derivation{Pi2Rule(premises, d.context.conclusion(), d.context.bound()), d.steps};
}

// Renames every bound variable of the context to a fresh name, throughout
// the context and the steps.
inline Derivation rename_bound(const RuleSet& rs, const Derivation& d) {
  const VarSet taken = names_in(rs, d);
  Substitution ren;
  std::map<std::string, std::string> names;
  VarSet used = taken;
  for (const auto& b : d.context.bound()) {
    const std::string n = fresh_name(used, b + "_");
    used.insert(n);
    names[b] = n;
    ren.insert_or_assign(b, Formula::var(n));
  }
  const auto rn = [&](const Formula& f) { return apply_substitution(f, ren); };
  const auto rn_subst = [&](const Substitution& s, bool keys) {
    Substitution out;
    for (const auto& [k, v] : s) out.insert_or_assign(keys && names.count(k) ? names.at(k) : k, rn(v));
    return out;
  };

  std::vector<Formula> premises;
  for (const auto& p : d.context.premises()) premises.push_back(rn(p));
  std::vector<std::string> bound;
  for (const auto& b : d.context.bound()) bound.push_back(names.at(b));

  std::vector<Step> steps;
  for (const auto& step : d.steps) {
    Step s = step;
    if (s.formula) s.formula = rn(*s.formula);
    if (auto* p = std::get_if<PremiseInstance>(&s.body)) p->subst = rn_subst(p->subst, true);
    if (auto* a = std::get_if<AxiomInstance>(&s.body)) {
      a->instance = rn_subst(a->instance, false);
      if (a->formula) a->formula = rn(*a->formula);
    }
    if (auto* g = std::get_if<SigmaApplication>(&s.body)) {
      g->subst = rn_subst(g->subst, false);
      for (auto& [from, to] : g->fresh) {
        if (names.count(to)) to = names.at(to);
      }
    }
    steps.push_back(std::move(s));
  }
  return Derivation{Pi2Rule(premises, d.context.conclusion(), bound), steps};
}

// One-step derivation of χ[φ/p] from Γ ∋ χ, where p are the context's
// bound variables and φ are the given images (free variables of the
// context by default, which never mention p).
inline Derivation reflexivity(const Pi2Rule& context, std::size_t index, const Substitution& images) {
  const Formula goal = apply_substitution(context.premises().at(index), images);
  return Derivation{Pi2Rule(context.premises(), goal, context.bound()), {Step{PremiseInstance{index, images}, goal}}};
}

}  // namespace pi2::corpus

#endif  // PI2_TESTS_CORPUS_HPP
