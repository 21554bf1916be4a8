// Copyright 2026 The pi2 Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pi2/io.hpp"

namespace pi2::cli {

namespace {

unsigned thread_cap() {
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PI2_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) threads = static_cast<unsigned>(v);
  }
  return threads;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw FormatError("expected a comma-separated list of integers, got '" + text + "'");
    }
    if (pos != item.size()) throw FormatError("expected a comma-separated list of integers, got '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string algebra;
  std::string rule;
  std::string file;
  std::string source;
  std::string target;
  std::string map;
  std::string generators;
  int member = 0;
  int max_explicit = 0;
  bool complete = false;
  bool with_q = false;
  bool json = false;
};

int cmd_check(const Options& o, std::ostream& out, const ExecutionOptions& exec) {
  const FiniteGodelAlgebra alg = parse_algebra_descriptor(o.algebra);
  const Pi2Rule rule = resolve_rule_source(o.rule);
  const RuleCheckResult r = rule_holds(alg, rule, exec);
  if (o.json) {
    out << check_json(alg, rule, r) << '\n';
  } else if (r.holds) {
    out << "holds on " << alg.descriptor() << '\n';
  } else {
    out << "refuted on " << alg.descriptor() << '\n'
        << "counterexample: " << valuation_text(alg, *r.counterexample) << '\n';
  }
  return r.holds ? kOk : kNegative;
}

void print_spectrum_text(const Spectrum& s, int max_explicit, std::ostream& out) {
  out << "threshold: " << s.threshold << '\n';
  for (int n = 2; n <= max_explicit; ++n) out << "  [" << n << "]: " << (s.valid_at(n) ? "valid" : "invalid") << '\n';
  out << "  [n] for n > " << s.threshold << ": " << (s.tail ? "valid" : "invalid") << '\n';
}

int cmd_decide(const Options& o, std::ostream& out, const ExecutionOptions& exec) {
  const Verdict v = decide_lc(resolve_rule_source(o.rule), exec);
  if (o.json) {
    out << verdict_json(v) << '\n';
    return kOk;
  }
  out << "derivable: " << yes_no(v.derivable) << '\n'
      << "admissible: " << yes_no(v.admissible) << '\n'
      << "hereditarily admissible: " << yes_no(v.hereditarily_admissible) << '\n'
      << "valid on Q: " << yes_no(v.q_valid) << '\n'
      << "refuting chain: " << (v.refuting_chain ? std::to_string(*v.refuting_chain) : "none") << '\n';
  print_spectrum_text(v.spectrum, v.spectrum.threshold, out);
  return kOk;
}

int cmd_spectrum(const Options& o, std::ostream& out, const ExecutionOptions& exec) {
  const Spectrum s = chain_spectrum(resolve_rule_source(o.rule), exec);
  const int max_explicit = o.max_explicit > 0 ? o.max_explicit : s.threshold;
  if (max_explicit < 2) throw FormatError("--max-explicit must be at least 2");
  if (o.json) {
    out << spectrum_json(s, max_explicit) << '\n';
  } else {
    print_spectrum_text(s, max_explicit, out);
  }
  return kOk;
}

int cmd_prove(const Options& o, std::ostream& out) {
  const DerivationFile file = parse_derivation_json(read_file(o.file));
  const CheckReport report = check_derivation(file.rules, file.derivation);
  if (o.json) {
    out << report_json(report) << '\n';
  } else if (report.accepted) {
    const auto n = file.derivation.steps.size();
    out << "accepted: " << n << (n == 1 ? " step\n" : " steps\n");
  } else {
    const auto& f = *report.failure;
    out << "rejected";
    if (f.step) out << " at step " << *f.step;
    out << ": " << to_string(f.error) << ": " << f.reason << '\n';
  }
  return report.accepted ? kOk : kNegative;
}

int cmd_classify(const Options& o, std::ostream& out) {
  ClassDescriptor c;
  for (int k : parse_int_list(o.generators)) c.finite_generators.insert(k);
  c.include_q = o.with_q;

  if (!o.algebra.empty()) {
    const ClassDescriptor minimal = classify_minimal(parse_algebra_descriptor(o.algebra));
    out << "minimal class: " << to_string(minimal) << '\n';
    return kOk;
  }
  if (o.complete) {
    const bool complete = is_inductively_complete(c);
    out << to_string(c) << (complete ? " is" : " is not") << " inductively complete\n";
    return complete ? kOk : kNegative;
  }
  if (o.member == 0) throw FormatError("classify needs --algebra, --member, or --complete");
  const Membership m = chain_in_class(o.member, c);
  out << "[" << o.member << "]" << (m.member ? " belongs" : " does not belong") << " to " << to_string(c) << '\n';
  if (m.witness) {
    out << "witness: lambda_" << *m.witness_index << " = " << to_string(*m.witness) << " holds on [k] for k <= "
        << *m.witness_index << " and fails on [" << o.member << "]\n";
  } else if (!m.member) {
    out << "no generator below " << o.member << "; no witness formula\n";
  }
  return m.member ? kOk : kNegative;
}

int cmd_embed(const Options& o, std::ostream& out) {
  EmbeddingMap e{parse_algebra_descriptor(o.source), parse_algebra_descriptor(o.target), {}};
  e.map = parse_int_list(o.map);
  const bool ok = is_cover_preserving_embedding(e);
  out << (ok ? "cover-preserving" : "not cover-preserving") << '\n';
  return ok ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pi2-rules over Goedel-Dummett logic", "pi2"};
  app.require_subcommand(1, 1);
  Options o;

  auto* check = app.add_subcommand("check", "check a rule on a finite algebra by exhaustive search");
  check->add_option("--algebra", o.algebra, "chain:N, product:chain:N,chain:M, or table:<path>")->required();
  check->add_option("--rule", o.rule, "rule text or @shorthand")->required();
  check->add_flag("--json", o.json);

  auto* decide = app.add_subcommand("decide", "decide derivability and admissibility over LC");
  decide->add_option("--rule", o.rule)->required();
  decide->add_flag("--json", o.json);

  auto* spectrum = app.add_subcommand("spectrum", "chain sizes on which a rule holds");
  spectrum->add_option("--rule", o.rule)->required();
  spectrum->add_option("--max-explicit", o.max_explicit, "last chain size listed (default: threshold)");
  spectrum->add_flag("--json", o.json);

  auto* prove = app.add_subcommand("prove", "check a derivation file");
  prove->add_option("file", o.file)->required();
  prove->add_flag("--json", o.json);

  auto* classify = app.add_subcommand("classify", "inductive classes of Goedel algebras");
  auto* by_algebra = classify->add_option("--algebra", o.algebra, "report the minimal class below this algebra");
  auto* member = classify->add_option("--member", o.member, "chain size to test for membership");
  auto* complete = classify->add_flag("--complete", o.complete, "test inductive completeness");
  classify->add_option("--generators", o.generators, "comma-separated chain sizes");
  classify->add_flag("--with-q", o.with_q, "include Q among the generators");
  by_algebra->excludes(member)->excludes(complete);
  member->excludes(complete);

  auto* embed = app.add_subcommand("embed", "test whether a map between chains is a cover-preserving embedding");
  embed->add_option("--source", o.source)->required();
  embed->add_option("--target", o.target)->required();
  embed->add_option("--map", o.map, "images of source elements 0,1,...")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pi2: " << e.what() << '\n';
    return kInputError;
  }

  const ExecutionOptions exec{thread_cap()};
  try {
    if (check->parsed()) return cmd_check(o, out, exec);
    if (decide->parsed()) return cmd_decide(o, out, exec);
    if (spectrum->parsed()) return cmd_spectrum(o, out, exec);
    if (prove->parsed()) return cmd_prove(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (embed->parsed()) return cmd_embed(o, out);
  } catch (const SyntaxError& e) {
    err << "pi2: " << e.what() << '\n';
  } catch (const AlgebraError& e) {
    err << "pi2: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "pi2: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "pi2: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace pi2::cli
