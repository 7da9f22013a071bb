#pragma once

// Command dispatch and report rendering for the lra tool.

#include "lra/dsl.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace lra {

struct CliOptions {
  std::string command;
  std::string file;
  std::string expr;
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  std::optional<int> max_degree;
  std::optional<int> degree;
  bool json = false;
  bool timing = false;
};

struct CommandResult {
  std::string command;
  std::uint64_t seed = 0;
  Report report;
  std::optional<std::string> result;
  nlohmann::ordered_json terms;
  std::optional<double> elapsed_ms;
  std::string error;
  int exit_code = 0;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"check", "check-bi",     "check-hopf",  "nf",
                                                 "coproduct", "antipode", "pbw",         "gerstenhaber",
                                                 "bialgebroid", "probe-conjecture"};
  return names;
}

namespace detail {

inline nlohmann::ordered_json env_terms(const Enveloping& u, const EnvElement& x) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (std::size_t l : it->first.letters()) names.push_back(u.structure().name(l));
    out.push_back({{"coefficient", it->second.to_string()}, {"word", names}});
  }
  return out;
}

inline nlohmann::ordered_json tensor_terms(const HopfEnveloping& h, const TensorEnvElement& t) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& p : h.pure_terms(t)) {
    nlohmann::ordered_json factors = nlohmann::ordered_json::array();
    for (const auto& f : p.factors) factors.push_back(h.format(f));
    out.push_back({{"coefficient", to_string(p.coefficient)}, {"factors", factors}});
  }
  return out;
}

/// Runs gate; on failure the gate report becomes the result.
inline bool gated(CommandResult& r, Report gate) {
  r.report = std::move(gate);
  return r.report.passed();
}

}  // namespace detail

/// Executes one command on the text of a .lra file. Input errors are
/// reported through exit code 2 and CommandResult::error.
inline CommandResult run_command(const CliOptions& opt, std::string_view file_text) {
  CommandResult r;
  r.command = opt.command;
  r.seed = opt.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    Model model = parse_model(file_text);
    const LieRinehartAlgebra& s = model.lr;
    const TensorActionSpec& ts = model.tensor_action;
    const std::uint64_t seed = opt.seed;
    auto samples = [&](std::size_t dflt) { return opt.samples.value_or(dflt); };
    auto max_degree = [&](int dflt) { return opt.max_degree.value_or(dflt); };
    auto need_expr = [&] {
      if (opt.expr.empty()) throw std::invalid_argument("command '" + opt.command + "' needs -e EXPR");
    };

    const std::string& c = opt.command;
    if (c == "check") {
      r.report = check_lr_axioms(s, samples(100), seed);
    } else if (c == "check-bi") {
      r.report = check_bi_lr(s, ts, samples(20), seed);
    } else if (c == "check-hopf") {
      r.report = check_bi_lr(s, ts, 20, seed);
      if (r.report.passed()) r.report.append(check_hopf_lr(s, ts, 20, seed));
      Report battery = check_bialgebra_axioms(s, ts, max_degree(3), samples(200), seed);
      r.report.append(battery);
    } else if (c == "nf") {
      need_expr();
      Enveloping u(s);
      EnvElement x = parse_expr(opt.expr, u);
      r.result = u.format(x);
      r.terms = detail::env_terms(u, x);
    } else if (c == "coproduct") {
      need_expr();
      if (detail::gated(r, check_bi_lr(s, ts, 20, seed))) {
        HopfEnveloping h(s);
        TensorEnvElement d = h.coproduct(parse_expr(opt.expr, h.u()));
        r.result = h.format(d);
        r.terms = detail::tensor_terms(h, d);
      }
    } else if (c == "antipode") {
      need_expr();
      if (detail::gated(r, check_hopf_lr(s, ts, 20, seed))) {
        HopfEnveloping h(s);
        EnvElement x = h.antipode(parse_expr(opt.expr, h.u()));
        r.result = h.format(x);
        r.terms = detail::env_terms(h.u(), x);
      }
    } else if (c == "pbw") {
      r.report = check_pbw(Enveloping(s), opt.degree.value_or(max_degree(5)), samples(100), seed);
    } else if (c == "gerstenhaber") {
      r.report = check_gerstenhaber(s, samples(20), seed);
    } else if (c == "bialgebroid") {
      r.report = check_lr_bialgebra(s, model.dual_or_zero(), max_degree(2), samples(20), seed);
    } else if (c == "probe-conjecture") {
      r.report = conjecture_probe(s, ts, model.dual_or_zero(), max_degree(2), samples(20), seed);
    } else {
      throw std::invalid_argument("unknown command '" + c + "'");
    }
    r.exit_code = r.report.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    r.error = e.what();
    r.exit_code = 2;
  }
  if (opt.timing)
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// {command, seed, checks: [{name, verdict, witness?}], elapsed_ms} plus
/// result/terms for expression commands and error for input errors.
inline std::string render_json(const CommandResult& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["seed"] = r.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.report.checks) {
    nlohmann::ordered_json o;
    o["name"] = c.name;
    o["verdict"] = to_string(c.verdict);
    if (!c.witness.empty()) o["witness"] = c.witness;
    if (!c.gating) o["gating"] = false;
    j["checks"].push_back(std::move(o));
  }
  if (r.result) {
    j["result"] = *r.result;
    j["terms"] = r.terms;
  }
  if (!r.error.empty()) j["error"] = r.error;
  j["elapsed_ms"] = r.elapsed_ms ? nlohmann::ordered_json(*r.elapsed_ms) : nlohmann::ordered_json(nullptr);
  return j.dump(2) + "\n";
}

inline std::string render_text(const CommandResult& r) {
  std::ostringstream out;
  if (!r.error.empty()) {
    out << "error: " << r.error << "\n";
    return out.str();
  }
  if (r.result) {
    out << *r.result << "\n";
    if (r.elapsed_ms) out << "elapsed: " << *r.elapsed_ms << " ms\n";
    return out.str();
  }
  std::size_t failed = 0;
  for (const auto& c : r.report.checks) {
    const char* tag = c.verdict == Verdict::pass ? "PASS" : c.verdict == Verdict::fail ? "FAIL" : "N/A ";
    out << tag << "  " << c.name;
    if (!c.gating) out << " (informational)";
    if (!c.witness.empty() && c.verdict != Verdict::pass) out << "\n      " << c.witness;
    out << "\n";
    if (c.gating && c.verdict != Verdict::pass) ++failed;
  }
  if (!r.report.checks.empty())
    out << (failed ? std::to_string(failed) + " check(s) did not pass" : std::string("all checks passed")) << "\n";
  if (r.elapsed_ms) out << "elapsed: " << *r.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace lra
