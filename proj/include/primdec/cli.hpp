#pragma once

// Command dispatch behind the primdec executable. A Command is validated
// (every ideal parsed, every argument count checked) before any computation.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "primdec/parser.hpp"
#include "primdec/report.hpp"

namespace primdec::cli {

inline const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"gb",     "intersect", "quotient", "saturate", "decompose", "ass",  "lambda",
                                          "compat", "indep",     "qx",       "ar",       "thm33",     "growth"};
  return v;
}

struct Command {
  std::string verb;
  std::vector<std::string> ideals;
  std::string ring;  // "x,y,z"; inferred when empty
  std::string order = "grevlex";
  std::vector<std::string> primes;  // --prime / --subset
  std::vector<std::string> picks;
  std::string j;
  std::string n;
  std::vector<std::uint32_t> exponents;
  std::optional<std::uint32_t> power;
  std::optional<std::uint32_t> k;
  std::uint32_t horizon = 12;
  std::uint32_t depth = 4;
  std::uint32_t n_max = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  std::string config;
  bool csv = false;
};

enum ExitCode : int { ok = 0, validation = 2, budget = 3, consistency = 4 };

struct Outcome {
  int exit_code = ExitCode::ok;
  std::string text;
  Json report;
};

namespace detail {

// Fills Command fields from a JSON config file; explicit fields win.
inline void apply_config(Command& cmd) {
  if (cmd.config.empty()) return;
  std::ifstream in(cmd.config);
  if (!in) throw PreconditionError("cannot open config file '" + cmd.config + "'");
  Json cfg;
  try {
    cfg = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw PreconditionError(std::string("malformed config: ") + e.what());
  }
  try {
    if (cfg.contains("ring") && cmd.ring.empty()) {
      if (cfg["ring"].is_array()) {
        for (const auto& v : cfg["ring"]) cmd.ring += (cmd.ring.empty() ? "" : ",") + v.get<std::string>();
      } else {
        cmd.ring = cfg["ring"].get<std::string>();
      }
    }
    if (cmd.ideals.empty()) {
      if (cfg.contains("ideals"))
        for (const auto& i : cfg["ideals"]) cmd.ideals.push_back(i.get<std::string>());
      if (cfg.contains("ideal")) cmd.ideals.push_back(cfg["ideal"].get<std::string>());
    }
    if (cfg.contains("subset") && cmd.primes.empty())
      for (const auto& p : cfg["subset"]) cmd.primes.push_back(p.get<std::string>());
    if (cfg.contains("n_max") && cmd.n_max == 0) cmd.n_max = cfg["n_max"].get<std::uint32_t>();
    if (cfg.contains("sample_depth")) cmd.depth = cfg["sample_depth"].get<std::uint32_t>();
    if (cfg.contains("seed")) cmd.seed = cfg["seed"].get<std::uint64_t>();
    if (cfg.contains("budget") && !cmd.budget) cmd.budget = cfg["budget"].get<std::uint64_t>();
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("bad config field: ") + e.what());
  }
}

inline MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw PreconditionError("unknown monomial order '" + name + "' (expected lex or grevlex)");
}

inline MonomialIdeal as_monomial(const Ideal& ideal, const char* what) {
  auto m = MonomialIdeal::from_ideal(ideal);
  if (!m) throw PreconditionError(std::string(what) + " must be a monomial ideal");
  return *m;
}

inline void require_count(const Command& cmd, std::size_t lo, std::size_t hi) {
  if (cmd.ideals.size() < lo || cmd.ideals.size() > hi) {
    std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + (hi == SIZE_MAX ? "n" : std::to_string(hi));
    throw PreconditionError("'" + cmd.verb + "' takes " + want + " ideal argument(s), got " + std::to_string(cmd.ideals.size()));
  }
}

// All parsed inputs of a command, sharing one ring.
struct Parsed {
  RingPtr ring;
  std::vector<Ideal> ideals;
  std::vector<Ideal> primes;
  std::vector<Ideal> picks;
  std::optional<Ideal> j;
  std::optional<Ideal> n;
};

inline Parsed parse_inputs(const Command& cmd) {
  const MonomialOrder order = parse_order(cmd.order);
  std::vector<std::string> texts = cmd.ideals;
  texts.insert(texts.end(), cmd.primes.begin(), cmd.primes.end());
  texts.insert(texts.end(), cmd.picks.begin(), cmd.picks.end());
  if (!cmd.j.empty()) texts.push_back(cmd.j);
  if (!cmd.n.empty()) texts.push_back(cmd.n);
  RingPtr ring = cmd.ring.empty() ? nullptr : parse_ring(cmd.ring, order);
  auto all = parse_ideals(texts, ring, order);
  Parsed p;
  p.ring = all.empty() ? ring : all.front().ring();
  std::size_t at = 0;
  for (std::size_t i = 0; i < cmd.ideals.size(); ++i) p.ideals.push_back(all[at++]);
  for (std::size_t i = 0; i < cmd.primes.size(); ++i) p.primes.push_back(all[at++]);
  for (std::size_t i = 0; i < cmd.picks.size(); ++i) p.picks.push_back(all[at++]);
  if (!cmd.j.empty()) p.j = all[at++];
  if (!cmd.n.empty()) p.n = all[at++];
  return p;
}

inline void validate(const Command& cmd, const Parsed& p) {
  const auto& v = cmd.verb;
  if (v == "gb" || v == "decompose" || v == "ass") require_count(cmd, 1, 1);
  if (v == "intersect" || v == "quotient" || v == "saturate") require_count(cmd, 2, 2);
  if (v == "lambda") {
    require_count(cmd, 1, 1);
    if (cmd.primes.size() != 1) throw PreconditionError("'lambda' needs exactly one --prime");
    if (!cmd.power || *cmd.power == 0) throw PreconditionError("'lambda' needs --power >= 1");
  }
  if (v == "compat") {
    require_count(cmd, 1, 1);
    if (cmd.picks.empty()) throw PreconditionError("'compat' needs at least one --pick");
  }
  if (v == "indep") {
    require_count(cmd, 1, 1);
    if (cmd.depth == 0) throw PreconditionError("sample depth must be positive");
  }
  if (v == "qx") {
    require_count(cmd, 1, 1);
    if (cmd.primes.empty()) throw PreconditionError("'qx' needs a nonempty --subset");
  }
  if (v == "ar") {
    require_count(cmd, 0, 0);
    if (!p.j || !p.n) throw PreconditionError("'ar' needs --j and --n");
    if (cmd.horizon == 0) throw PreconditionError("horizon must be positive");
  }
  if (v == "thm33") {
    require_count(cmd, 1, SIZE_MAX);
    if (cmd.exponents.size() != cmd.ideals.size()) throw PreconditionError("'thm33' needs one exponent per ideal");
    if (!p.j) throw PreconditionError("'thm33' needs --j");
    if (!cmd.k) throw PreconditionError("'thm33' needs --k");
  }
  if (v == "growth") {
    require_count(cmd, 1, SIZE_MAX);
    if (cmd.n_max == 0) throw PreconditionError("'growth' needs n_max >= 1");
  }
  for (const auto& prime : p.primes) MonomialPrime::from_ideal(prime);
}

inline std::string ideal_text(const Json& gens) {
  std::string s = "ideal(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].get<std::string>();
  return s + ")";
}

inline std::string prime_text(const MonomialPrime& p) { return p.to_string(); }

inline std::vector<MonomialPrime> primes_of(const Parsed& p) {
  std::vector<MonomialPrime> out;
  for (const auto& i : p.primes) out.push_back(MonomialPrime::from_ideal(i));
  return out;
}

inline Json execute(const Command& cmd, const Parsed& p, std::string& text) {
  const auto& v = cmd.verb;
  std::ostringstream os;
  Json result;

  if (v == "gb") {
    result["basis"] = generators_json(p.ideals[0].groebner_basis());
    // Basis in leading-monomial order for the text form.
    for (const auto& g : p.ideals[0].groebner_basis()) os << g.to_string() << "\n";
  } else if (v == "intersect") {
    result["ideal"] = ideal_json(intersect(p.ideals[0], p.ideals[1]));
    os << ideal_text(result["ideal"]) << "\n";
  } else if (v == "quotient") {
    result["ideal"] = ideal_json(quotient(p.ideals[0], p.ideals[1]));
    os << ideal_text(result["ideal"]) << "\n";
  } else if (v == "saturate") {
    auto s = saturate(p.ideals[0], p.ideals[1]);
    result["ideal"] = ideal_json(s.ideal);
    result["exponent"] = s.exponent;
    os << ideal_text(result["ideal"]) << "\nexponent " << s.exponent << "\n";
  } else if (v == "decompose") {
    auto dec = primary_decomposition(as_monomial(p.ideals[0], "input"));
    result = to_json(dec);
    for (const auto& c : dec.components) os << prime_text(c.prime) << " : " << c.component.to_string() << "\n";
  } else if (v == "ass") {
    auto primes = associated_primes(as_monomial(p.ideals[0], "input"));
    result["primes"] = primes_json(primes);
    for (const auto& q : primes) os << prime_text(q) << "\n";
  } else if (v == "lambda") {
    const auto ideal = as_monomial(p.ideals[0], "input");
    const auto prime = MonomialPrime::from_ideal(p.primes[0]);
    const auto dec = primary_decomposition(ideal);
    const auto q = lambda_candidates(ideal, dec, prime, *cmd.power);
    result["prime"] = prime_json(prime);
    result["power"] = *cmd.power;
    result["threshold"] = lambda_threshold(ideal, dec, prime);
    result["component"] = ideal_json(q);
    os << q.to_string() << "\n";
  } else if (v == "compat") {
    const auto ideal = as_monomial(p.ideals[0], "input");
    std::vector<PrimaryComponent> picks;
    for (const auto& raw : p.picks) {
      auto q = as_monomial(raw, "pick");
      if (!q.is_proper_nonzero()) throw PreconditionError("pick " + q.to_string() + " is not proper");
      auto prime = is_primary(q);
      if (!prime) throw PreconditionError("pick " + q.to_string() + " is not primary");
      picks.push_back({*prime, q});
    }
    auto report = check_compatibility(ideal, std::move(picks));
    result = to_json(report);
    os << (report.compatible() ? "compatible" : "COUNTEREXAMPLE") << ": " << report.intersection.to_string() << "\n";
  } else if (v == "indep") {
    const auto ideal = as_monomial(p.ideals[0], "input");
    const auto dec = primary_decomposition(ideal);
    const AssPoset ass = AssPoset::from_primes(dec.primes());
    std::vector<std::vector<MonomialPrime>> subsets;
    if (!cmd.primes.empty()) {
      subsets.push_back(primes_of(p));
    } else {
      for (std::size_t mask = 0; mask < (std::size_t{1} << ass.primes.size()); ++mask) {
        std::vector<MonomialPrime> s;
        for (std::size_t i = 0; i < ass.primes.size(); ++i)
          if (mask >> i & 1) s.push_back(ass.primes[i]);
        subsets.push_back(std::move(s));
      }
    }
    Json rows = Json::array();
    bool all_match = true;
    for (const auto& s : subsets) {
      auto report = check_independence(ideal, dec, s, cmd.depth, cmd.seed);
      const bool open = is_open_subset(s, ass);
      const bool match = open == (report.verdict == IndependenceVerdict::invariant);
      all_match = all_match && match;
      Json row = to_json(report);
      row["open"] = open;
      row["matches_openness"] = match;
      rows.push_back(std::move(row));
      os << "{";
      for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << prime_text(s[i]);
      os << "} " << (open ? "open" : "not open") << ", "
         << (report.verdict == IndependenceVerdict::invariant ? "invariant" : "varies");
      if (report.witness)
        os << ": " << report.witness->intersection_a.to_string() << " != " << report.witness->intersection_b.to_string();
      os << "\n";
    }
    result["subsets"] = std::move(rows);
    result["all_match"] = all_match;
  } else if (v == "qx") {
    const auto q = canonical_qx(as_monomial(p.ideals[0], "input"), primes_of(p));
    result["ideal"] = ideal_json(q);
    os << ideal_text(result["ideal"]) << "\n";
  } else if (v == "ar") {
    auto report = ar_number(*p.j, *p.n, cmd.horizon);
    result = to_json(report);
    os << "k = " << report.k << " (verified on n = " << report.window_start << ".." << report.window_end << ")\n";
  } else if (v == "thm33") {
    const bool holds = thm33_identity_check(p.ideals, std::span<const std::uint32_t>(cmd.exponents), *p.j, *cmd.k);
    result["holds"] = holds;
    result["power"] = *cmd.k * total_degree(cmd.exponents);
    os << (holds ? "holds" : "fails") << "\n";
  } else if (v == "growth") {
    std::vector<MonomialIdeal> ideals;
    for (const auto& i : p.ideals) ideals.push_back(as_monomial(i, "growth input"));
    auto report = linear_growth_experiment(ideals, cmd.n_max, GrowthOptions{cmd.seed});
    result = to_json(report);
    if (cmd.csv) {
      os << growth_csv(report);
    } else {
      os << "k_empirical = " << report.k_empirical << "\n";
      for (const auto& point : report.points)
        for (const auto& rec : point.primes) {
          os << "n=(";
          for (std::size_t i = 0; i < point.exponents.size(); ++i) os << (i ? "," : "") << point.exponents[i];
          os << ") " << prime_text(rec.prime) << " m=" << rec.min_power << "\n";
        }
      os << (report.all_verified ? "all decompositions verified" : "some grid points failed verification") << "\n";
    }
  }
  text = os.str();
  return result;
}

}  // namespace detail

/// Runs a command. Never throws for library errors; they become exit codes.
inline Outcome run(Command cmd) {
  Outcome out;
  out.report["command"] = cmd.verb;
  out.report["seed"] = cmd.seed;
  out.report["inputs"] = Json::object();
  out.report["result"] = nullptr;
  out.report["diagnostics"] = Json::object();
  try {
    if (std::find(verbs().begin(), verbs().end(), cmd.verb) == verbs().end())
      throw PreconditionError("unknown command '" + cmd.verb + "'");
    detail::apply_config(cmd);
    out.report["seed"] = cmd.seed;
    const auto parsed = detail::parse_inputs(cmd);
    detail::validate(cmd, parsed);

    Json inputs;
    inputs["ring"] = parsed.ring ? Json(parsed.ring->variables()) : Json::array();
    inputs["order"] = cmd.order;
    Json ideals = Json::array();
    for (const auto& i : parsed.ideals) ideals.push_back(generators_json(i.generators()));
    inputs["ideals"] = ideals;
    if (!parsed.primes.empty()) {
      Json primes = Json::array();
      for (const auto& q : parsed.primes) primes.push_back(generators_json(q.generators()));
      inputs["primes"] = primes;
    }
    if (!parsed.picks.empty()) {
      Json picks = Json::array();
      for (const auto& q : parsed.picks) picks.push_back(generators_json(q.generators()));
      inputs["picks"] = picks;
    }
    if (parsed.j) inputs["j"] = generators_json(parsed.j->generators());
    if (parsed.n) inputs["n"] = generators_json(parsed.n->generators());
    if (!cmd.exponents.empty()) inputs["exponents"] = cmd.exponents;
    if (cmd.power) inputs["power"] = *cmd.power;
    if (cmd.k) inputs["k"] = *cmd.k;
    if (cmd.verb == "ar") inputs["horizon"] = cmd.horizon;
    if (cmd.verb == "indep") inputs["sample_depth"] = cmd.depth;
    if (cmd.verb == "growth") inputs["n_max"] = cmd.n_max;
    out.report["inputs"] = std::move(inputs);

    const std::uint64_t budget = cmd.budget.value_or(GroebnerOptions{}.step_budget);
    out.report["diagnostics"]["step_budget"] = budget;
    set_default_step_budget(budget);
    out.report["result"] = detail::execute(cmd, parsed, out.text);
    out.exit_code = ExitCode::ok;
    if (cmd.verb == "growth" && !out.report["result"]["all_verified"].get<bool>()) {
      out.report["diagnostics"]["error"] = {{"class", "internal_consistency"},
                                            {"message", "some grid points failed verification"},
                                            {"exit_code", ExitCode::consistency}};
      out.exit_code = ExitCode::consistency;
    }
  } catch (const Error& e) {
    int code = ExitCode::validation;
    if (dynamic_cast<const BudgetExceeded*>(&e)) code = ExitCode::budget;
    if (dynamic_cast<const ConsistencyError*>(&e)) code = ExitCode::consistency;
    Json err{{"class", e.error_class()}, {"message", e.what()}, {"exit_code", code}};
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
      err["line"] = pe->line();
      err["column"] = pe->column();
    }
    out.report["diagnostics"]["error"] = std::move(err);
    out.exit_code = code;
    out.text = std::string("error [") + e.error_class() + "]: " + e.what() + "\n";
  }
  return out;
}

}  // namespace primdec::cli
