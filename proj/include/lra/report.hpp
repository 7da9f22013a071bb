#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lra {

enum class Verdict { pass, fail, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

/// Outcome of one named identity. `witness` is empty unless the check failed
/// or was gated off. Non-gating checks (the conjecture probe) never make a
/// report fail.
struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string witness;
  std::size_t cases = 0;
  bool gating = true;
};

struct Report {
  std::vector<CheckResult> checks;

  void add(CheckResult c) { checks.push_back(std::move(c)); }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool passed() const {
    for (const auto& c : checks)
      if (c.gating && c.verdict != Verdict::pass) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (c.gating && c.verdict != Verdict::pass) return &c;
    return nullptr;
  }
};

/// Accumulates cases for a single check and keeps the first counterexample.
class CheckAccumulator {
 public:
  explicit CheckAccumulator(std::string name, bool gating = true) {
    result_.name = std::move(name);
    result_.gating = gating;
  }

  /// Records one case. `witness` is only invoked on the first failure.
  template <class WitnessFn>
  bool expect(bool ok, WitnessFn&& witness) {
    ++result_.cases;
    if (!ok && result_.verdict == Verdict::pass) {
      result_.verdict = Verdict::fail;
      result_.witness = witness();
    }
    return ok;
  }

  bool failed() const { return result_.verdict == Verdict::fail; }
  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

inline CheckResult not_applicable(std::string name, std::string why, bool gating = true) {
  CheckResult c;
  c.name = std::move(name);
  c.verdict = Verdict::not_applicable;
  c.witness = std::move(why);
  c.gating = gating;
  return c;
}

}  // namespace lra
