#include "lra/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-Rinehart structure checker"};
  app.require_subcommand(1);
  lra::CliOptions opt;

  for (const auto& name : lra::command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("file", opt.file, "structure file (.lra)")->required();
    sub->add_option("--seed", opt.seed, "sampler seed");
    sub->add_option("--samples", opt.samples, "random samples per check");
    sub->add_option("--max-degree", opt.max_degree, "word length / grade bound");
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_flag("--timing", opt.timing, "report elapsed time");
    if (name == "nf" || name == "coproduct" || name == "antipode")
      sub->add_option("-e,--expr", opt.expr, "element of U(A,L)")->required();
    if (name == "pbw") sub->add_option("--degree", opt.degree, "filtration degree bound (default 5)");
    sub->callback([&opt, sub] { opt.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  lra::CommandResult r;
  try {
    r = lra::run_command(opt, read_file(opt.file));
  } catch (const std::exception& e) {
    r.command = opt.command;
    r.seed = opt.seed;
    r.error = e.what();
    r.exit_code = 2;
  }
  if (opt.json)
    std::cout << lra::render_json(r);
  else if (r.exit_code == 2)
    std::cerr << lra::render_text(r);
  else
    std::cout << lra::render_text(r);
  return r.exit_code;
}
