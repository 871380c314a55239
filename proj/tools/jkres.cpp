// jkres: command-line front end.
//
//   jkres <command> problem.json [--json] [--delta-witness 2,1] ...
//   jkres selftest [--count N]        (seed from JKRES_SEED)
//
// Exit codes: 0 success, 1 parse error, 2 violated precondition.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "jkres/commands.hpp"
#include "jkres/errors.hpp"
#include "selftest.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw jkres::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::map<std::string, std::string> kDescriptions{
    {"normalize", "canonical partial fraction form over the arrangement"},
    {"split", "G and NG parts"},
    {"jk-residue", "Jeffrey-Kirwan residue in the nbc basis"},
    {"nbc-basis", "no-broken-circuit basis in colex order"},
    {"dual-check", "pairing of iterated residues with the nbc basis"},
    {"wall-residue", "residue along every wall, or the one given by --wall"},
    {"separate", "constant-coefficient operators on the nbc basis"},
    {"inverse-laplace", "piecewise polynomial on the primal chambers"},
    {"jump-check", "jumps across walls against the wall-residue formula"},
    {"smoothness", "differentiability class of the inverse Laplace transform"},
    {"fourier", "stratified Fourier transform as a sum of semi-open cones"},
    {"chambers", "chambers of the primal or dual fan"},
    {"plot", "SVG drawing of a rank-2 inverse Laplace transform"},
};

struct Flags {
  std::string input;
  bool json = false;
  std::string delta, gamma, point, space, output;
  std::vector<int> wall;
  int exp = 0;
};

jkres::CommandOptions to_options(const Flags& f) {
  jkres::CommandOptions o;
  if (!f.delta.empty()) o.delta_witness = jkres::parse_vec(f.delta);
  if (!f.gamma.empty()) o.gamma_witness = jkres::parse_vec(f.gamma);
  if (!f.point.empty()) o.point = jkres::parse_vec(f.point);
  if (!f.wall.empty()) o.wall = f.wall;
  if (!f.space.empty()) o.space = jkres::parse_space(f.space);
  if (f.exp) o.exp_sign = f.exp;
  return o;
}

int run(const std::string& command, const Flags& f) {
  try {
    const jkres::Problem problem = jkres::parse_problem_text(read_input(f.input));
    const jkres::CommandOptions options = merge(jkres::options_from_json(problem.options), to_options(f));
    const jkres::CommandResult result = jkres::run_command(command, problem, options);
    const std::string out = f.json && command != "plot" ? result.json.dump(2) + "\n" : result.text;
    if (f.output.empty()) {
      std::cout << out;
    } else {
      std::ofstream file(f.output);
      if (!file) throw jkres::ParseError("cannot write '" + f.output + "'");
      file << out;
    }
    return 0;
  } catch (const jkres::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const jkres::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Jeffrey-Kirwan residues, Laplace transforms and jump formulas"};
  app.require_subcommand(1);
  Flags flags;
  std::string chosen;

  for (const auto& name : jkres::command_names()) {
    auto* sub = app.add_subcommand(name, kDescriptions.at(name));
    sub->add_option("problem", flags.input, "problem file in JSON, '-' for stdin")->required();
    sub->add_flag("--json", flags.json, "print JSON instead of text");
    sub->add_option("--delta-witness", flags.delta, "point of the dual chamber, e.g. 2,1");
    sub->add_option("--gamma-witness", flags.gamma, "point of the primal chamber");
    sub->add_option("--point", flags.point, "evaluation point");
    sub->add_option("--wall", flags.wall, "indices of vectors spanning the wall")->delimiter(',');
    sub->add_option("--space", flags.space, "primal or dual")->check(CLI::IsMember({"primal", "dual"}));
    sub->add_option("--exp", flags.exp, "jk-residue of e^{s<h,z>} phi, s = 1 or -1")->check(CLI::IsMember({-1, 1}));
    sub->add_option("--output,-o", flags.output, "write the result to a file");
    sub->callback([&chosen, name] { chosen = name; });
  }

  int count = 20;
  auto* self = app.add_subcommand("selftest", "randomized property checks (seed from JKRES_SEED)");
  self->add_option("--count", count, "cases per check")->check(CLI::PositiveNumber);
  self->callback([&chosen] { chosen = "selftest"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (chosen == "selftest") {
    std::uint64_t seed = 1;
    if (const char* s = std::getenv("JKRES_SEED")) seed = std::strtoull(s, nullptr, 10);
    return jkres::selftest(seed, count, std::cout) ? 0 : 2;
  }
  try {
    return run(chosen, flags);
  } catch (const jkres::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  }
}
