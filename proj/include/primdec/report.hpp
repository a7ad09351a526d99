#pragma once

// JSON encodings of ideals and theorem-lab reports. Ideals are written as
// sorted lists of canonical generator strings.

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "primdec/theoremlab.hpp"

namespace primdec {

using Json = nlohmann::ordered_json;

inline Json generators_json(const std::vector<Polynomial>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

/// An ideal by its reduced Groebner basis, which is unique.
inline Json ideal_json(const Ideal& ideal) { return generators_json(ideal.groebner_basis()); }

inline Json ideal_json(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const auto& g : ideal.generators()) out.push_back(monomial_to_string(g, *ideal.ring()));
  std::sort(out.begin(), out.end());
  return out;
}

inline Json prime_json(const MonomialPrime& p) {
  Json vars = Json::array();
  for (auto v : p.variables()) vars.push_back(p.ring()->variables()[v]);
  return vars;
}

inline Json primes_json(const std::vector<MonomialPrime>& primes) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(prime_json(p));
  return out;
}

inline Json to_json(const PrimaryDecomposition& dec) {
  Json comps = Json::array();
  for (const auto& c : dec.components) comps.push_back({{"prime", prime_json(c.prime)}, {"component", ideal_json(c.component)}});
  return {{"components", comps}, {"irredundant", dec.irredundant}, {"minimal", dec.minimal}};
}

inline Json to_json(const CompatibilityReport& r) {
  Json picks = Json::array();
  for (const auto& p : r.picks) picks.push_back({{"prime", prime_json(p.prime)}, {"component", ideal_json(p.component)}});
  return {{"picks", picks},
          {"intersection", ideal_json(r.intersection)},
          {"equal", r.equal},
          {"irredundant", r.irredundant},
          {"minimal", r.minimal},
          {"verdict", r.compatible() ? "compatible" : "counterexample"}};
}

inline Json to_json(const IndependenceReport& r) {
  Json out{{"subset", primes_json(r.subset)},
           {"sample_depth", r.sample_depth},
           {"thresholds", r.thresholds},
           {"intersections_checked", r.intersections_checked},
           {"verdict", r.verdict == IndependenceVerdict::invariant ? "invariant" : "varies"}};
  if (r.invariant_intersection) out["invariant_intersection"] = ideal_json(*r.invariant_intersection);
  if (r.witness)
    out["witness"] = {{"powers_a", r.witness->powers_a},
                      {"intersection_a", ideal_json(r.witness->intersection_a)},
                      {"powers_b", r.witness->powers_b},
                      {"intersection_b", ideal_json(r.witness->intersection_b)}};
  return out;
}

inline Json to_json(const ARReport& r) {
  Json out{{"j", ideal_json(r.j)},
           {"n", ideal_json(r.n_ideal)},
           {"ambient", ideal_json(r.ambient)},
           {"k", r.k},
           {"window", {r.window_start, r.window_end}},
           {"status", r.status == ARStatus::verified_on_window ? "verified-on-window" : "falsified-at"}};
  out["witness_n"] = r.witness_n ? Json(*r.witness_n) : Json();
  return out;
}

inline Json to_json(const GrowthReport& r) {
  Json ideals = Json::array();
  for (const auto& i : r.ideals) ideals.push_back(ideal_json(i));
  Json points = Json::array();
  for (const auto& p : r.points) {
    Json primes = Json::array();
    for (const auto& rec : p.primes) {
      Json entry{{"prime", prime_json(rec.prime)},
                 {"min_power", rec.min_power},
                 {"min_power_label", "constructive minimum"},
                 {"family_min_power", rec.family_min_power},
                 {"identity_at_min", rec.identity_at_min},
                 {"fails_below_min", rec.fails_below_min}};
      entry["component"] = rec.component ? ideal_json(*rec.component) : Json();
      primes.push_back(std::move(entry));
    }
    Json point{{"n", p.exponents}, {"total", p.total}};
    point["product"] = p.product ? ideal_json(*p.product) : Json();
    point["primes"] = std::move(primes);
    point["decomposition_verified"] = p.decomposition_verified;
    point["skipped"] = p.skipped;
    if (!p.error.empty()) point["error"] = p.error;
    points.push_back(std::move(point));
  }
  return {{"ideals", ideals},
          {"n_max", r.n_max},
          {"k_empirical", r.k_empirical},
          {"all_verified", r.all_verified},
          {"points", points}};
}

/// One CSV row per (grid point, prime): n, |n|, prime, m_P(n), ratio.
inline std::string growth_csv(const GrowthReport& r) {
  std::string out = "n,total,prime,min_power,family_min_power,ratio\n";
  for (const auto& p : r.points)
    for (const auto& rec : p.primes) {
      std::string n;
      for (std::size_t i = 0; i < p.exponents.size(); ++i) n += (i ? ";" : "") + std::to_string(p.exponents[i]);
      std::string prime;
      for (std::size_t i = 0; i < rec.prime.variables().size(); ++i)
        prime += (i ? ";" : "") + rec.prime.ring()->variables()[rec.prime.variables()[i]];
      const double ratio = static_cast<double>(rec.min_power) / p.total;
      out += n + "," + std::to_string(p.total) + "," + prime + "," + std::to_string(rec.min_power) + "," +
             std::to_string(rec.family_min_power) + "," + std::to_string(ratio) + "\n";
    }
  return out;
}

}  // namespace primdec
