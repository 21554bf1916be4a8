// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pi2/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace pi2 {
namespace {

using nlohmann::json;

TEST(AlgebraDescriptor, ChainsAndProducts) {
  EXPECT_EQ(parse_algebra_descriptor("chain:4").size(), 4u);
  const auto p = parse_algebra_descriptor("product:chain:3,chain:2");
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p.descriptor(), "product:chain:3,chain:2");
  for (const char* bad : {"chain:", "chain:1", "chain:x", "ring:3", "product:", "product:chain:2,", ""}) {
    EXPECT_THROW(parse_algebra_descriptor(bad), std::exception) << bad;
  }
}

TEST(AlgebraDescriptor, TableFile) {
  const auto path = std::filesystem::temp_directory_path() / "pi2_io_test_table.json";
  {
    std::ofstream out(path);
    out << R"({"elements": ["0", "a", "b", "1"], "leq": [[0, 1], [0, 2], [1, 3], [2, 3]]})";
  }
  const auto alg = parse_algebra_descriptor("table:" + path.string());
  EXPECT_EQ(alg.size(), 4u);
  EXPECT_FALSE(alg.is_linear());
  std::filesystem::remove(path);
  EXPECT_THROW(parse_algebra_descriptor("table:" + path.string()), FormatError);
}

TEST(TableJson, Errors) {
  EXPECT_THROW(parse_table_json("{"), FormatError);
  EXPECT_THROW(parse_table_json(R"({"elements": ["0"]})"), FormatError);
  EXPECT_THROW(parse_table_json(R"({"elements": ["0", "1"], "leq": [[0]]})"), FormatError);
  const auto t = parse_table_json(R"({"elements": ["0", "1"], "leq": [[0, 1]]})");
  EXPECT_EQ(t.elements.size(), 2u);
}

TEST(RuleSource, Shorthands) {
  EXPECT_EQ(to_string(resolve_rule_source("@density")), to_string(make_density()));
  EXPECT_EQ(to_string(resolve_rule_source("@rho:2")), to_string(make_rho(2)));
  EXPECT_EQ(to_string(resolve_rule_source("@lambda:3")), to_string(make_lambda_axiom(3)));
  EXPECT_EQ(to_string(resolve_rule_source("@lambda-axiom:3")), to_string(make_lambda_axiom(3)));
  EXPECT_EQ(to_string(resolve_rule_source("@prelinearity")), to_string(make_prelinearity()));
  EXPECT_EQ(resolve_rule_source("p, p -> q => q").premises().size(), 2u);
  for (const char* bad : {"@nope", "@rho:0", "@rho:x", "@lambda:1"}) {
    EXPECT_THROW(resolve_rule_source(bad), std::exception) << bad;
  }
  EXPECT_THROW(resolve_rule_source("p =>"), SyntaxError);
}

TEST(DerivationJson, ParsesEveryStepKind) {
  const auto f = parse_derivation_json(R"({
    "base": "IPC",
    "sigma": [{"name": "d", "rule": "@density"}],
    "context": {"premises": ["a"], "bound": [], "goal": "a"},
    "steps": [
      {"premise": 0, "formula": "a"},
      {"axiom": "K", "instance": {"A": "a", "B": "b"}},
      {"mp": [0, 1]},
      {"sigma": "d", "subst": {"c": "0"}, "premises": [2], "fresh": {"r": "e"}}
    ]})");
  EXPECT_EQ(f.rules.base(), BaseLogic::IPC);
  ASSERT_NE(f.rules.find("d"), nullptr);
  ASSERT_EQ(f.derivation.steps.size(), 4u);
  EXPECT_TRUE(std::holds_alternative<PremiseInstance>(f.derivation.steps[0].body));
  EXPECT_TRUE(f.derivation.steps[0].formula);
  EXPECT_TRUE(std::holds_alternative<AxiomInstance>(f.derivation.steps[1].body));
  const auto& mp = std::get<ModusPonens>(f.derivation.steps[2].body);
  EXPECT_EQ(mp.minor, 0u);
  EXPECT_EQ(mp.major, 1u);
  const auto& s = std::get<SigmaApplication>(f.derivation.steps[3].body);
  EXPECT_EQ(s.fresh.at("r"), "e");
  EXPECT_EQ(s.subst.at("c"), Formula::bot());
}

TEST(DerivationJson, DefaultsToLc) {
  const auto f = parse_derivation_json(R"({"context": {"goal": "1"}, "steps": [{"axiom": "TOP"}]})");
  EXPECT_EQ(f.rules.base(), BaseLogic::LC);
  EXPECT_TRUE(check_derivation(f.rules, f.derivation).accepted);
}

TEST(DerivationJson, Errors) {
  const char* bad[] = {
      "not json",
      R"({"steps": []})",
      R"({"base": "K4", "context": {"goal": "p"}, "steps": []})",
      R"({"context": {"goal": "p &"}, "steps": []})",
      R"({"context": {"goal": "p"}, "steps": [{"premise": 0, "mp": [0, 0]}]})",
      R"({"context": {"goal": "p"}, "steps": [{}]})",
      R"({"context": {"goal": "p"}, "steps": [{"mp": [0]}]})",
      R"({"context": {"goal": "p"}, "steps": [{"premise": -1}]})",
      R"({"context": {"goal": "p"}, "steps": [{"sigma": "d", "premises": [], "fresh": {"r": "1x"}}]})",
      R"({"context": {"premises": ["r"], "bound": ["r"], "goal": "r"}, "steps": []})",
      R"({"sigma": [{"name": "d", "rule": "@density"}, {"name": "d", "rule": "@density"}],
          "context": {"goal": "p"}, "steps": []})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_derivation_json(text), FormatError) << text;
}

TEST(Renderers, VerdictKeysInOrder) {
  const auto text = verdict_json(decide_lc(make_density()));
  EXPECT_EQ(text.rfind(R"({"derivable":false,"admissible":true,"hereditarily_admissible":true,"spectrum":)", 0), 0u);
  const auto j = json::parse(text);
  EXPECT_EQ(j["refuting_chain"], 3);
  EXPECT_EQ(j["spectrum"]["threshold"], 11);
  EXPECT_EQ(j["spectrum"]["explicit"].size(), 10u);
}

TEST(Renderers, Spectrum) {
  const auto j = json::parse(spectrum_json(chain_spectrum(make_rho(1)), 6));
  EXPECT_EQ(j["explicit"], json::parse("[false, true, true, true, true]"));
  EXPECT_EQ(j["tail"], true);
}

TEST(Renderers, Check) {
  const auto c3 = make_chain(3);
  const auto j = json::parse(check_json(c3, make_density(), rule_holds(c3, make_density())));
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["counterexample"], json::parse(R"({"c": "0", "g": "1", "p": "1", "q": "0"})"));
  const auto ok = json::parse(check_json(c3, make_prelinearity(), rule_holds(c3, make_prelinearity())));
  EXPECT_TRUE(ok["counterexample"].is_null());
}

TEST(Renderers, Report) {
  const auto f = parse_derivation_json(R"({"context": {"premises": ["a", "b -> c"], "goal": "c"},
      "steps": [{"premise": 0}, {"premise": 1}, {"mp": [0, 1]}]})");
  const auto j = json::parse(report_json(check_derivation(f.rules, f.derivation)));
  EXPECT_EQ(j["accepted"], false);
  EXPECT_EQ(j["failure"]["error"], "MPMismatch");
  EXPECT_EQ(j["failure"]["step"], 2);
  EXPECT_EQ(j["steps"][0]["status"], "ok");
  EXPECT_EQ(j["steps"][2]["status"], "failed");
}

TEST(Renderers, ValuationText) {
  const auto c = make_chain(3);
  EXPECT_EQ(valuation_text(c, {{"p", 1}, {"q", 2}}), "p=1, q=2");
}

}  // namespace
}  // namespace pi2
