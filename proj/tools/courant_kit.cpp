#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "courant/cli/run.hpp"
#include "courant/errors.hpp"

using namespace courant;

namespace {

constexpr int kUsage = 3;

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> p;
  for (std::size_t pos = 0; pos <= text.size();) {
    const auto comma = std::min(text.find(',', pos), text.size());
    p.push_back(parse_rational(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Courant algebroid and Dirac structure checks", "courant-kit"};
  app.set_version_flag("--version", cli::kVersion);
  std::string command;
  std::vector<std::string> args;
  std::string model_path;
  std::optional<unsigned> degree_cap;
  std::string point;
  std::string out_path;
  app.add_option("command", command, "verify-axioms | check-dirac | reduce | from-quotient | pullback | "
                                     "check-hamiltonian | bialgebra-verify | bialgebra-check | bialgebra-search")
      ->required();
  app.add_option("args", args, "command arguments");
  app.add_option("--model", model_path, "model file (JSON)")->required();
  app.add_option("--degree-cap", degree_cap, "degree cap for polynomial membership");
  app.add_option("--point", point, "generic point p1,...,pn");
  app.add_option("--out", out_path, "also write the report here");
  // Grid arguments such as -1,0,1 must not be read as flags.
  app.allow_extras(false);
  app.positionals_at_end(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  std::string echo = command;
  for (const auto& a : args) echo += " " + a;
  echo += " --model " + model_path;
  if (degree_cap) echo += " --degree-cap " + std::to_string(*degree_cap);
  if (!point.empty()) echo += " --point " + point;

  try {
    const cli::Model model = cli::load_model(model_path);
    cli::RunOptions opts;
    opts.degree_cap = degree_cap;
    if (!point.empty()) opts.point = parse_point(point);
    const cli::RunResult result = cli::run(command, args, model, opts);
    const std::string text = cli::format_report(echo, result);
    std::cout << text;
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "courant-kit: cannot write '" << out_path << "'\n";
        return kUsage;
      }
      out << text;
    }
    return cli::exit_code(result.report.status());
  } catch (const ParseError& e) {
    std::cerr << "courant-kit: parse error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    std::cerr << "courant-kit: validation error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "courant-kit: " << e.what() << "\n";
  }
  return kUsage;
}
