// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pi2/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pi2 {

using json = nlohmann::ordered_json;

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw FormatError("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

TableDescription parse_table_json(std::string_view json_text) {
  const json j = parse_json(json_text);
  try {
    TableDescription d;
    d.elements = j.at("elements").get<std::vector<std::string>>();
    for (const auto& pair : j.at("leq")) {
      if (!pair.is_array() || pair.size() != 2) throw FormatError("each leq entry must be a pair [i, j]");
      d.leq.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return d;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad table description: ") + e.what());
  }
}

FiniteGodelAlgebra parse_algebra_descriptor(std::string_view descriptor) {
  if (descriptor.starts_with("chain:")) {
    return make_chain(parse_int(descriptor.substr(6), "chain size"));
  }
  if (descriptor.starts_with("product:")) {
    std::vector<FiniteGodelAlgebra> factors;
    for (auto part : split(descriptor.substr(8), ',')) {
      if (!part.starts_with("chain:")) {
        throw FormatError("product factors must be chain:N, got '" + std::string(part) + "'");
      }
      factors.push_back(make_chain(parse_int(part.substr(6), "chain size")));
    }
    return make_product(factors);
  }
  if (descriptor.starts_with("table:")) {
    return from_table(parse_table_json(read_file(std::string(descriptor.substr(6)))));
  }
  throw FormatError("unknown algebra descriptor '" + std::string(descriptor) +
                    "' (expected chain:N, product:chain:N,..., or table:<path>)");
}

Pi2Rule resolve_rule_source(std::string_view source) {
  if (!source.starts_with("@")) return parse_rule(source);
  const auto colon = source.find(':');
  const std::string_view name = source.substr(1, colon == std::string_view::npos ? std::string_view::npos : colon - 1);
  auto arg = [&] {
    if (colon == std::string_view::npos) throw FormatError("rule shorthand @" + std::string(name) + " needs an argument");
    return parse_int(source.substr(colon + 1), "rule shorthand argument");
  };
  auto no_arg = [&] {
    if (colon != std::string_view::npos) throw FormatError("rule shorthand @" + std::string(name) + " takes no argument");
  };
  try {
    if (name == "density") {
      no_arg();
      return make_density();
    }
    if (name == "prelinearity") {
      no_arg();
      return make_prelinearity();
    }
    if (name == "rho") return make_rho(arg());
    if (name == "lambda" || name == "lambda-axiom") return make_lambda_axiom(arg());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("unknown rule shorthand '" + std::string(source) + "'");
}

namespace {

// A formula in rule-item syntax, so `t <= s` and `t = s` are accepted.
Formula parse_item(const std::string& text) { return parse_rule("=> " + text).conclusion(); }

Substitution parse_subst(const json& j) {
  Substitution s;
  if (j.is_null()) return s;
  if (!j.is_object()) throw FormatError("substitution must be an object");
  for (const auto& [var, image] : j.items()) {
    if (!is_identifier(var)) throw FormatError("'" + var + "' is not a variable name");
    s.insert_or_assign(var, parse_item(image.get<std::string>()));
  }
  return s;
}

std::size_t parse_index(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw FormatError("step references must be non-negative integers");
  return j.get<std::size_t>();
}

const json& field_or_null(const json& j, const char* key) {
  static const json null_value;
  auto it = j.find(key);
  return it == j.end() ? null_value : *it;
}

Step parse_step(const json& j) {
  if (!j.is_object()) throw FormatError("each step must be an object");
  const int kinds = static_cast<int>(j.contains("premise")) + static_cast<int>(j.contains("axiom")) +
                    static_cast<int>(j.contains("mp")) + static_cast<int>(j.contains("sigma"));
  if (kinds != 1) throw FormatError("each step needs exactly one of premise, axiom, mp, sigma");

  Step step;
  if (j.contains("formula")) step.formula = parse_item(j.at("formula").get<std::string>());

  if (j.contains("premise")) {
    step.body = PremiseInstance{parse_index(j.at("premise")), parse_subst(field_or_null(j, "subst"))};
  } else if (j.contains("axiom")) {
    AxiomInstance a;
    a.schema = j.at("axiom").get<std::string>();
    a.instance = parse_subst(field_or_null(j, "instance"));
    a.formula = step.formula;
    step.body = std::move(a);
  } else if (j.contains("mp")) {
    const json& mp = j.at("mp");
    if (!mp.is_array() || mp.size() != 2) throw FormatError("mp takes [minor, major]");
    step.body = ModusPonens{parse_index(mp[0]), parse_index(mp[1])};
  } else {
    SigmaApplication s;
    s.rule = j.at("sigma").get<std::string>();
    s.subst = parse_subst(field_or_null(j, "subst"));
    for (const auto& k : j.at("premises")) s.premises.push_back(parse_index(k));
    const json& fresh = field_or_null(j, "fresh");
    if (!fresh.is_null()) {
      for (const auto& [from, to] : fresh.items()) {
        const auto name = to.get<std::string>();
        if (!is_identifier(name)) throw FormatError("'" + name + "' is not a variable name");
        s.fresh.emplace(from, name);
      }
    }
    step.body = std::move(s);
  }
  return step;
}

}  // namespace

DerivationFile parse_derivation_json(std::string_view json_text) {
  const json j = parse_json(json_text);
  try {
    BaseLogic base = BaseLogic::LC;
    if (j.contains("base")) {
      const auto b = j.at("base").get<std::string>();
      if (b == "IPC") {
        base = BaseLogic::IPC;
      } else if (b != "LC") {
        throw FormatError("base must be IPC or LC, got '" + b + "'");
      }
    }
    std::vector<NamedRule> sigma;
    for (const auto& r : field_or_null(j, "sigma")) {
      sigma.push_back({r.at("name").get<std::string>(), resolve_rule_source(r.at("rule").get<std::string>())});
    }
    const json& ctx = j.at("context");
    std::vector<Formula> premises;
    for (const auto& p : field_or_null(ctx, "premises")) premises.push_back(parse_item(p.get<std::string>()));
    std::vector<std::string> bound;
    for (const auto& b : field_or_null(ctx, "bound")) bound.push_back(b.get<std::string>());
    Pi2Rule context(std::move(premises), parse_item(ctx.at("goal").get<std::string>()), std::move(bound));

    std::vector<Step> steps;
    for (const auto& s : j.at("steps")) steps.push_back(parse_step(s));
    return DerivationFile{RuleSet(base, std::move(sigma)), Derivation{std::move(context), std::move(steps)}};
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad derivation file: ") + e.what());
  } catch (const SyntaxError& e) {
    throw FormatError(std::string("bad formula in derivation file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("bad derivation file: ") + e.what());
  }
}

std::string valuation_text(const FiniteGodelAlgebra& alg, const Valuation& v) {
  std::string s;
  for (const auto& [name, value] : v) {
    if (!s.empty()) s += ", ";
    s += name + "=" + alg.label(value);
  }
  return s;
}

namespace {

json spectrum_object(const Spectrum& s, int max_explicit) {
  json explicit_values = json::array();
  for (int n = 2; n <= max_explicit; ++n) explicit_values.push_back(s.valid_at(n));
  json o;
  o["explicit"] = std::move(explicit_values);
  o["tail"] = s.tail;
  o["threshold"] = s.threshold;
  return o;
}

}  // namespace

std::string verdict_json(const Verdict& v) {
  json o;
  o["derivable"] = v.derivable;
  o["admissible"] = v.admissible;
  o["hereditarily_admissible"] = v.hereditarily_admissible;
  o["spectrum"] = spectrum_object(v.spectrum, v.spectrum.threshold);
  o["q_valid"] = v.q_valid;
  o["refuting_chain"] = v.refuting_chain ? json(*v.refuting_chain) : json(nullptr);
  return o.dump();
}

std::string spectrum_json(const Spectrum& s, int max_explicit) { return spectrum_object(s, max_explicit).dump(); }

std::string check_json(const FiniteGodelAlgebra& alg, const Pi2Rule& rule, const RuleCheckResult& r) {
  json o;
  o["algebra"] = alg.descriptor();
  o["rule"] = to_string(rule);
  o["holds"] = r.holds;
  if (r.counterexample) {
    json cex = json::object();
    for (const auto& [name, value] : *r.counterexample) cex[name] = alg.label(value);
    o["counterexample"] = std::move(cex);
  } else {
    o["counterexample"] = nullptr;
  }
  return o.dump();
}

std::string report_json(const CheckReport& r) {
  json steps = json::array();
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    json s;
    s["index"] = i;
    switch (r.steps[i].status) {
      case StepStatus::Ok: s["status"] = "ok"; break;
      case StepStatus::Failed: s["status"] = "failed"; break;
      case StepStatus::Unchecked: s["status"] = "unchecked"; break;
    }
    s["formula"] = r.steps[i].formula ? json(to_string(*r.steps[i].formula)) : json(nullptr);
    steps.push_back(std::move(s));
  }
  json o;
  o["accepted"] = r.accepted;
  o["steps"] = std::move(steps);
  if (r.failure) {
    json f;
    f["step"] = r.failure->step ? json(*r.failure->step) : json(nullptr);
    f["error"] = to_string(r.failure->error);
    f["reason"] = r.failure->reason;
    o["failure"] = std::move(f);
  } else {
    o["failure"] = nullptr;
  }
  return o.dump();
}

}  // namespace pi2
