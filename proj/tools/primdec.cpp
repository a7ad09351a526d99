#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "primdec/cli.hpp"

namespace {

struct Verb {
  const char* name;
  const char* help;
};

constexpr Verb kVerbs[] = {
    {"gb", "reduced Groebner basis of an ideal"},
    {"intersect", "intersection of two ideals"},
    {"quotient", "ideal quotient (I : J)"},
    {"saturate", "saturation (I : J^inf) and its exponent"},
    {"decompose", "primary decomposition of a monomial ideal"},
    {"ass", "associated primes of a monomial ideal"},
    {"lambda", "P-primary component from (I + P^n) localized at P"},
    {"compat", "intersect one chosen primary component per associated prime"},
    {"indep", "independence of primary components over subsets of Ass versus openness"},
    {"qx", "canonical intersection Q_X over an open subset X"},
    {"ar", "window-verified Artin-Rees number AR(J, N)"},
    {"thm33", "check (J^{k|n|} + T) cap (T : J^inf) = T for T = prod I_i^{n_i}"},
    {"growth", "linear growth experiment over an exponent grid"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact primary decomposition and ideal-theory experiments over Q"};
  app.require_subcommand(1);

  primdec::cli::Command cmd;
  bool json = false;
  std::uint32_t power = 0, k = 0;
  CLI::Option* power_opt = nullptr;
  CLI::Option* k_opt = nullptr;

  for (const auto& verb : kVerbs) {
    auto* sub = app.add_subcommand(verb.name, verb.help);
    sub->add_option("ideals", cmd.ideals, "ideal literals, e.g. \"ideal(x^2, x*y)\"");
    sub->add_option("--ring", cmd.ring, "variable list fixing the variable order, e.g. x,y,z");
    sub->add_option("--order", cmd.order, "monomial order: grevlex (default) or lex");
    sub->add_flag("--json", json, "print the JSON report instead of text");
    sub->add_option("--budget", cmd.budget, "Groebner step budget");
    sub->add_option("--seed", cmd.seed, "seed for sampled experiments");
    sub->add_option("--config", cmd.config, "JSON config file");
    const std::string name = verb.name;
    if (name == "lambda") {
      sub->add_option("--prime", cmd.primes, "associated prime, e.g. \"ideal(x,y)\"");
      power_opt = sub->add_option("--power", power, "power n of the prime");
    }
    if (name == "compat") sub->add_option("--pick", cmd.picks, "chosen primary component (repeatable)");
    if (name == "indep" || name == "qx") sub->add_option("--subset", cmd.primes, "prime of the subset X (repeatable)");
    if (name == "indep") sub->add_option("--depth", cmd.depth, "number of sampled powers per prime");
    if (name == "ar") {
      sub->add_option("--j", cmd.j, "the ideal J");
      sub->add_option("--n", cmd.n, "the ideal N");
      sub->add_option("--horizon", cmd.horizon, "verification window length");
    }
    if (name == "thm33") {
      sub->add_option("--j", cmd.j, "the ideal J");
      sub->add_option("--exponents", cmd.exponents, "exponent tuple n, e.g. 1,2")->delimiter(',');
      k_opt = sub->add_option("--k", k, "slope k");
    }
    if (name == "growth") {
      sub->add_option("--n-max", cmd.n_max, "largest exponent in the grid");
      sub->add_flag("--csv", cmd.csv, "print CSV rows instead of text");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : primdec::cli::ExitCode::validation;
  }

  cmd.verb = app.get_subcommands().front()->get_name();
  if (power_opt && power_opt->count()) cmd.power = power;
  if (k_opt && k_opt->count()) cmd.k = k;

  const auto outcome = primdec::cli::run(cmd);
  if (json) {
    std::cout << outcome.report.dump(2) << "\n";
  } else if (outcome.exit_code == 0) {
    std::cout << outcome.text;
  } else {
    std::cerr << outcome.text;
  }
  return outcome.exit_code;
}
