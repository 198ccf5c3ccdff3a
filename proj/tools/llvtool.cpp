#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace llv;

namespace {

struct Subcommand {
  const char* name;
  const char* help;
};

constexpr Subcommand kSubcommands[] = {
    {"validate", "check the ring axioms, bigrading, form and Fujiki relation"},
    {"llv", "Lie closure of Lefschetz operators, grading, so identification, commutator suites"},
    {"pw", "Lagrangian triple, monodromy index, perverse versus weight filtration"},
    {"kuga", "Clifford algebra suite: dimension, relations, trace, complex structure, polarization"},
    {"hl", "hard Lefschetz versus isotropy on enumerated classes"},
    {"verbitsky", "subalgebra generated by degree 2 and isotropic powers"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of Lefschetz-type structure on model cohomology rings"};
  app.require_subcommand(1);
  cli::RunConfig cfg;
  std::string format = "text", out;

  for (const auto& sc : kSubcommands) {
    auto* sub = app.add_subcommand(sc.name, sc.help);
    sub->add_option("--fixture", cfg.fixture, "k3 | bogomolov | torus")
        ->check(CLI::IsMember({"k3", "bogomolov", "torus"}));
    sub->add_option("--input", cfg.input, "ring-description file");
    sub->add_option("--b2", cfg.b2, "bogomolov: dimension of degree 2 (3..24, default 5)");
    sub->add_option("--n", cfg.n, "bogomolov: half the complex dimension (1..3, default 2)");
    sub->add_option("--g", cfg.g, "torus: complex dimension (2g <= 8, default 2)");
    sub->add_option("--q", cfg.q, "quadratic form, diag:a,b,... or gram:a,b;c,d");
    sub->add_option("--field", cfg.field, "rational | gaussian")->check(CLI::IsMember({"rational", "gaussian"}));
    sub->add_option("--budget", cfg.budget, "sampling budget for the ideal saturation (0 = default)");
    sub->add_option("--out", out, "write the report to this file");
    sub->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    if (std::string(sc.name) == "pw") sub->add_option("--beta", cfg.beta, "isotropic class, comma-separated coordinates");
    if (std::string(sc.name) == "kuga") sub->add_option("--dim", cfg.dim, "number of generators (at most 10)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    Report rep = cli::run(cfg);
    const std::string text = format == "json" ? rep.to_json() : rep.to_text();
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out);
      if (!f) {
        std::cerr << "error: cannot write '" << out << "'\n";
        return 2;
      }
      f << text;
    }
    return rep.exit_code();
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
