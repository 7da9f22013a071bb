#include "lra/cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace lra;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(LRA_FIXTURE_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CommandResult run(const std::string& command, const std::string& file, const std::string& expr = "") {
  CliOptions opt;
  opt.command = command;
  opt.expr = expr;
  return run_command(opt, fixture(file));
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("check", "euler.lra").exit_code, 0);
  EXPECT_EQ(run("check-bi", "translation.lra").exit_code, 1);
  EXPECT_EQ(run("pbw", "broken_jacobi.lra").exit_code, 1);
  EXPECT_EQ(run("check-hopf", "broken_antipode.lra").exit_code, 1);
  EXPECT_EQ(run("bialgebroid", "sl2_failing_dual.lra").exit_code, 1);
  EXPECT_EQ(run("nf", "euler.lra", "x*z").exit_code, 2);
  EXPECT_EQ(run("nf", "euler.lra").exit_code, 2);
  EXPECT_EQ(run("bogus", "euler.lra").exit_code, 2);
  CliOptions opt;
  opt.command = "check";
  EXPECT_EQ(run_command(opt, "algebra { y }").exit_code, 2);
}

TEST(Cli, TranslationWitnesses) {
  CommandResult r = run("check-bi", "translation.lra");
  EXPECT_EQ(r.report.find("bi.counit_morphism")->witness, "e(x(y)) = e(1) = 1 != 0");
  EXPECT_EQ(r.report.find("bi.coproduct_equivariance")->verdict, Verdict::fail);
  EXPECT_NE(render_text(r).find("= 1 != 0"), std::string::npos);
}

TEST(Cli, ExpressionCommands) {
  EXPECT_EQ(*run("nf", "euler.lra", "x*y").result, "y*x + y");
  EXPECT_EQ(*run("coproduct", "euler.lra", "x").result, "x ⊗ 1 + 1 ⊗ x");
  EXPECT_EQ(*run("antipode", "euler.lra", "y*x").result, "y*x + y");
  CommandResult gated = run("coproduct", "translation.lra", "x");
  EXPECT_EQ(gated.exit_code, 1);
  EXPECT_FALSE(gated.result.has_value());
}

TEST(Cli, JsonShape) {
  CommandResult r = run("coproduct", "euler.lra", "x*y");
  auto j = nlohmann::ordered_json::parse(render_json(r));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "seed", "checks", "result", "terms", "elapsed_ms"}));
  EXPECT_TRUE(j["elapsed_ms"].is_null());
  EXPECT_EQ(j["terms"].size(), 6u);
  EXPECT_EQ(j["terms"][0]["factors"], nlohmann::ordered_json::array({"y*x", "1"}));
  auto e = nlohmann::ordered_json::parse(render_json(run("nf", "euler.lra", "z")));
  EXPECT_EQ(e["error"], "line 1, column 1: unknown identifier 'z'");
}

TEST(Cli, ProbeNeverFails) {
  for (const char* f : {"translation.lra", "torus.lra", "sl2_failing_dual.lra", "nonabelian2_bialgebra.lra"})
    EXPECT_EQ(run("probe-conjecture", f).exit_code, 0) << f;
}

TEST(Cli, RenderingIsDeterministic) {
  for (const char* c : {"check-hopf", "bialgebroid", "probe-conjecture", "pbw"}) {
    CliOptions opt;
    opt.command = c;
    opt.seed = 7;
    EXPECT_EQ(render_json(run_command(opt, fixture("aff2.lra"))), render_json(run_command(opt, fixture("aff2.lra"))));
  }
}
