// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pi2/proofcheck.hpp"

#include <set>
#include <stdexcept>

#include "pi2/semantics.hpp"

namespace pi2 {

const char* to_string(BaseLogic b) { return b == BaseLogic::IPC ? "IPC" : "LC"; }

const char* to_string(CheckError e) {
  switch (e) {
    case CheckError::BadReference: return "BadReference";
    case CheckError::NotAnAxiomInstance: return "NotAnAxiomInstance";
    case CheckError::MPMismatch: return "MPMismatch";
    case CheckError::UnknownSigmaRule: return "UnknownSigmaRule";
    case CheckError::PremiseShapeMismatch: return "PremiseShapeMismatch";
    case CheckError::EigenvariableViolation: return "EigenvariableViolation";
    case CheckError::IllegalSubstitution: return "IllegalSubstitution";
    case CheckError::GoalMismatch: return "GoalMismatch";
  }
  return "?";
}

RuleSet::RuleSet(BaseLogic base, std::vector<NamedRule> sigma) : base_(base), sigma_(std::move(sigma)) {
  std::set<std::string> names;
  for (const auto& r : sigma_) {
    if (!names.insert(r.name).second) throw std::invalid_argument("duplicate rule name '" + r.name + "'");
  }
}

const NamedRule* RuleSet::find(const std::string& name) const {
  for (const auto& r : sigma_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

namespace {

struct Schema {
  std::string id;
  Formula pattern;
};

const std::vector<Schema>& schemas() {
  static const std::vector<Schema> all = [] {
    const std::vector<std::pair<std::string, std::string>> text = {
        {"K", "A -> (B -> A)"},
        {"S", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))"},
        {"AND1", "A & B -> A"},
        {"AND2", "A & B -> B"},
        {"AND3", "A -> (B -> A & B)"},
        {"OR1", "A -> A | B"},
        {"OR2", "B -> A | B"},
        {"OR3", "(A -> C) -> ((B -> C) -> (A | B -> C))"},
        {"EFQ", "0 -> A"},
        {"IMP-DIST", "(A -> B) -> ((A -> (B -> C)) -> (A -> C))"},
        {"TOP", "1"},
        {"LC", "(A -> B) | (B -> A)"},
    };
    std::vector<Schema> out;
    for (const auto& [id, src] : text) out.push_back({id, parse_formula(src)});
    return out;
  }();
  return all;
}

bool unify(const Formula& pattern, const Formula& f, Substitution& binding) {
  if (pattern.is_var()) {
    auto [it, inserted] = binding.emplace(pattern.name(), f);
    return inserted || it->second == f;
  }
  if (pattern.kind() != f.kind()) return false;
  if (!pattern.is_binary()) return true;
  return unify(pattern.left(), f.left(), binding) && unify(pattern.right(), f.right(), binding);
}

}  // namespace

const std::vector<std::string>& axiom_schema_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : schemas()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

const Formula& axiom_schema(const std::string& id) {
  for (const auto& s : schemas()) {
    if (s.id == id) return s.pattern;
  }
  throw std::out_of_range("unknown axiom schema '" + id + "'");
}

std::optional<Substitution> match_schema(const std::string& id, const Formula& f) {
  Substitution binding;
  if (unify(axiom_schema(id), f, binding)) return binding;
  return std::nullopt;
}

std::optional<std::string> match_axiom(const Formula& f) {
  for (const auto& s : schemas()) {
    Substitution binding;
    if (unify(s.pattern, f, binding)) return s.id;
  }
  return std::nullopt;
}

namespace {

struct StepFailure {
  CheckError error;
  std::string reason;
};

class Checker {
 public:
  Checker(const RuleSet& rs, const Derivation& d) : rs_(rs), d_(d) {
    const auto& ctx = d.context;
    bound_.insert(ctx.bound().begin(), ctx.bound().end());
    VarSet in_gamma;
    for (const auto& p : ctx.premises()) collect_variables(p, in_gamma);
    for (const auto& v : in_gamma) {
      if (!bound_.count(v)) free_in_gamma_.insert(v);
    }
    goal_vars_ = variables(ctx.conclusion());
  }

  CheckReport run() {
    CheckReport report;
    report.steps.resize(d_.steps.size());
    for (std::size_t i = 0; i < d_.steps.size(); ++i) {
      std::variant<Formula, StepFailure> r = check_step(i);
      if (auto* fail = std::get_if<StepFailure>(&r)) {
        report.steps[i].status = StepStatus::Failed;
        report.failure = Failure{i, fail->error, fail->reason};
        return report;
      }
      Formula f = std::get<Formula>(r);
      const auto& claimed = d_.steps[i].formula;
      if (claimed && *claimed != f) {
        report.steps[i].status = StepStatus::Failed;
        report.failure = Failure{i, claimed_error(d_.steps[i]),
                                 "claimed formula " + to_string(*claimed) + " differs from derived " + to_string(f)};
        return report;
      }
      report.steps[i] = {StepStatus::Ok, f};
      proved_.push_back(std::move(f));
    }
    const Formula& goal = d_.context.conclusion();
    if (proved_.empty() || proved_.back() != goal) {
      report.failure = Failure{std::nullopt, CheckError::GoalMismatch,
                               proved_.empty() ? "derivation has no steps"
                                               : "last step proves " + to_string(proved_.back()) + ", goal is " +
                                                     to_string(goal)};
      return report;
    }
    report.accepted = true;
    return report;
  }

 private:
  static CheckError claimed_error(const Step& s) {
    switch (s.body.index()) {
      case 0: return CheckError::PremiseShapeMismatch;
      case 1: return CheckError::NotAnAxiomInstance;
      case 2: return CheckError::MPMismatch;
      default: return CheckError::PremiseShapeMismatch;
    }
  }

  std::variant<Formula, StepFailure> check_step(std::size_t i) {
    return std::visit([&](const auto& body) { return check(i, body); }, d_.steps[i].body);
  }

  std::variant<Formula, StepFailure> check(std::size_t, const PremiseInstance& s) {
    const auto& premises = d_.context.premises();
    if (s.index >= premises.size()) {
      return StepFailure{CheckError::BadReference, "premise index " + std::to_string(s.index) + " out of range"};
    }
    for (const auto& [var, image] : s.subst) {
      if (!bound_.count(var)) {
        return StepFailure{CheckError::IllegalSubstitution,
                           "premise instance substitutes " + var + ", which is not a bound variable of the context"};
      }
      for (const auto& v : variables(image)) {
        if (bound_.count(v)) {
          return StepFailure{CheckError::IllegalSubstitution,
                             "image of " + var + " mentions bound variable " + v};
        }
      }
    }
    return apply_substitution(premises[s.index], s.subst);
  }

  std::variant<Formula, StepFailure> check(std::size_t, const AxiomInstance& s) {
    const Formula* pattern = nullptr;
    try {
      pattern = &axiom_schema(s.schema);
    } catch (const std::out_of_range&) {
      return StepFailure{CheckError::NotAnAxiomInstance, "unknown axiom schema '" + s.schema + "'"};
    }
    if (s.schema == "LC" && rs_.base() != BaseLogic::LC) {
      return StepFailure{CheckError::NotAnAxiomInstance, "schema LC is not an axiom of IPC"};
    }
    if (s.formula) {
      if (!match_schema(s.schema, *s.formula)) {
        return StepFailure{CheckError::NotAnAxiomInstance,
                           to_string(*s.formula) + " is not an instance of " + s.schema};
      }
      return *s.formula;
    }
    return apply_substitution(*pattern, s.instance);
  }

  std::variant<Formula, StepFailure> check(std::size_t i, const ModusPonens& s) {
    if (s.minor >= i || s.major >= i) {
      return StepFailure{CheckError::BadReference, "modus ponens must cite earlier steps"};
    }
    const Formula& major = proved_[s.major];
    if (major.kind() != NodeKind::Imp || major.left() != proved_[s.minor]) {
      return StepFailure{CheckError::MPMismatch, "step " + std::to_string(s.major) + " (" + to_string(major) +
                                                     ") is not an implication from step " + std::to_string(s.minor) +
                                                     " (" + to_string(proved_[s.minor]) + ")"};
    }
    return major.right();
  }

  std::variant<Formula, StepFailure> check(std::size_t i, const SigmaApplication& s) {
    const NamedRule* named = rs_.find(s.rule);
    if (!named) return StepFailure{CheckError::UnknownSigmaRule, "no rule named '" + s.rule + "' in sigma"};
    const Pi2Rule& rule = named->rule;

    if (s.premises.size() != rule.premises().size()) {
      return StepFailure{CheckError::PremiseShapeMismatch,
                         "rule " + s.rule + " has " + std::to_string(rule.premises().size()) + " premises, " +
                             std::to_string(s.premises.size()) + " cited"};
    }
    for (std::size_t j : s.premises) {
      if (j >= i) return StepFailure{CheckError::BadReference, "rule application must cite earlier steps"};
    }
    const std::set<std::string> rule_bound(rule.bound().begin(), rule.bound().end());
    if (s.fresh.size() != rule_bound.size()) {
      return StepFailure{CheckError::PremiseShapeMismatch,
                         "every bound variable of " + s.rule + " needs exactly one eigenvariable"};
    }
    for (const auto& [from, to] : s.fresh) {
      if (!rule_bound.count(from)) {
        return StepFailure{CheckError::PremiseShapeMismatch, from + " is not a bound variable of " + s.rule};
      }
    }
    for (const auto& [var, image] : s.subst) {
      if (rule_bound.count(var)) {
        return StepFailure{CheckError::PremiseShapeMismatch,
                           "bound variable " + var + " of " + s.rule + " is instantiated by eigenvariable only"};
      }
    }

    // Images of the rule's free variables; unmapped ones stay themselves.
    Substitution full = s.subst;
    VarSet image_vars;
    for (const auto& v : rule.free_variables()) {
      auto it = full.find(v);
      if (it == full.end()) it = full.emplace(v, Formula::var(v)).first;
      collect_variables(it->second, image_vars);
    }

    std::set<std::string> eigen;
    for (const auto& [from, to] : s.fresh) {
      if (!eigen.insert(to).second) {
        return StepFailure{CheckError::EigenvariableViolation, to + " is used for two bound variables"};
      }
      if (free_in_gamma_.count(to)) {
        return StepFailure{CheckError::EigenvariableViolation, to + " occurs free in the context premises"};
      }
      if (goal_vars_.count(to)) {
        return StepFailure{CheckError::EigenvariableViolation, to + " occurs in the goal"};
      }
      if (image_vars.count(to)) {
        return StepFailure{CheckError::EigenvariableViolation,
                           to + " occurs in the substitution for the free variables of " + s.rule};
      }
      full.insert_or_assign(from, Formula::var(to));
    }

    for (std::size_t k = 0; k < s.premises.size(); ++k) {
      const Formula expected = apply_substitution(rule.premises()[k], full);
      if (proved_[s.premises[k]] != expected) {
        return StepFailure{CheckError::PremiseShapeMismatch,
                           "premise " + std::to_string(k) + " of " + s.rule + " should be " + to_string(expected) +
                               ", step " + std::to_string(s.premises[k]) + " proves " +
                               to_string(proved_[s.premises[k]])};
      }
    }
    return apply_substitution(rule.conclusion(), full);
  }

  const RuleSet& rs_;
  const Derivation& d_;
  std::set<std::string> bound_;
  VarSet free_in_gamma_;
  VarSet goal_vars_;
  std::vector<Formula> proved_;
};

}  // namespace

CheckReport check_derivation(const RuleSet& rs, const Derivation& d) { return Checker(rs, d).run(); }

bool soundness_probe(const RuleSet& rs, const Derivation& d, std::span<const FiniteGodelAlgebra> algebras) {
  if (!check_derivation(rs, d).accepted) throw std::invalid_argument("soundness probe needs an accepted derivation");
  const Formula prelinearity = make_prelinearity().conclusion();
  bool sound = true;
  for (const auto& alg : algebras) {
    if (rs.base() == BaseLogic::LC && !holds_identity(alg, prelinearity)) continue;
    bool models_sigma = true;
    for (const auto& r : rs.sigma()) {
      if (!rule_holds(alg, r.rule).holds) {
        models_sigma = false;
        break;
      }
    }
    if (models_sigma && !rule_holds(alg, d.context).holds) sound = false;
  }
  return sound;
}

}  // namespace pi2
