// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Usage: acceptance [unit-test executables...]
// The listed executables are run as part of the whole-suite runtime check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "primdec/primdec.hpp"
#include "support/random_ideals.hpp"

namespace {

using namespace primdec;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  Verdict() { detail << std::fixed << std::setprecision(2); }

  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

int failures = 0;

void report(const char* id, const char* title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail << "uncaught " << e.what();
  }
  std::printf("[%s] %s %s: %s(%.2f s)\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.str().c_str(),
              seconds_since(start));
  std::fflush(stdout);
  if (!v.pass) ++failures;
}

// Random ideals for the independence suite: at least two associated primes, at most four.
std::vector<MonomialIdeal> independence_suite(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  while (out.size() < count) {
    auto i = testing::random_monomial_ideal(rng, {2, 4, 4, 6});
    const auto ass = associated_primes(i);
    if (ass.size() >= 2 && ass.size() <= 4) out.push_back(std::move(i));
  }
  return out;
}

void criterion_compatibility(Verdict& v) {
  const auto start = Clock::now();
  std::mt19937_64 rng(1001);
  const std::size_t ideals = 60, vectors_per_ideal = 10;
  std::size_t checked = 0, failed = 0;
  for (std::size_t t = 0; t < ideals; ++t) {
    const auto i = testing::random_monomial_ideal(rng, {2, 4, 4, 6});
    const auto dec = primary_decomposition(i);
    std::vector<std::uint32_t> thresholds;
    for (const auto& c : dec.components) thresholds.push_back(lambda_threshold(i, dec, c.prime));
    std::set<std::vector<std::uint32_t>> seen;
    while (seen.size() < vectors_per_ideal) {
      std::vector<std::uint32_t> powers;
      for (auto n0 : thresholds) powers.push_back(n0 + static_cast<std::uint32_t>(testing::uniform(rng, 0, 9)));
      if (!seen.insert(powers).second) continue;
      std::vector<PrimaryComponent> picks;
      for (std::size_t k = 0; k < powers.size(); ++k)
        picks.push_back({dec.components[k].prime, lambda_candidates(i, dec, dec.components[k].prime, powers[k])});
      const auto r = check_compatibility(i, dec, std::move(picks));
      ++checked;
      if (!r.compatible()) {
        ++failed;
        v.require(false, i.to_string());
      }
    }
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 60.0, "runtime over 60 s");
  v.detail << ideals << " ideals, " << checked << " pick vectors, " << failed << " failures, " << elapsed
           << " s < 60 s ";
}

struct IndependenceTally {
  std::size_t subsets = 0, open = 0, mismatches = 0, qx_checked = 0, qx_failed = 0;
};

IndependenceTally run_independence_suite(Verdict* independence, Verdict* qx) {
  IndependenceTally tally;
  for (const auto& i : independence_suite(30, 2002)) {
    const auto dec = primary_decomposition(i);
    const auto ass = AssPoset::from_primes(dec.primes());
    for (std::size_t mask = 1; mask < (std::size_t{1} << ass.primes.size()); ++mask) {
      std::vector<MonomialPrime> x;
      for (std::size_t k = 0; k < ass.primes.size(); ++k)
        if (mask >> k & 1) x.push_back(ass.primes[k]);
      const bool open = is_open_subset(x, ass);
      const auto r = check_independence(i, dec, x, 4, 2002);
      ++tally.subsets;
      if (open != (r.verdict == IndependenceVerdict::invariant)) {
        ++tally.mismatches;
        if (independence) independence->require(false, i.to_string() + " subset mask " + std::to_string(mask));
      }
      if (open) {
        ++tally.open;
        if (qx && r.invariant_intersection) {
          ++tally.qx_checked;
          const auto q = MonomialIdeal::from_ideal(canonical_qx(i, x));
          if (!q || !(*q == *r.invariant_intersection)) {
            ++tally.qx_failed;
            qx->require(false, i.to_string() + " subset mask " + std::to_string(mask));
          }
        }
      }
    }
  }
  return tally;
}

void criterion_independence(Verdict& v) {
  const auto t = run_independence_suite(&v, nullptr);
  v.detail << "30 ideals, " << t.subsets << " subsets (" << t.open << " open), " << t.mismatches << " mismatches; ";

  const auto r = testing::ring_with(2);
  const auto i = *MonomialIdeal::from_ideal(parse_ideal("ideal(x^2, x*y)", r));
  const auto w = check_independence(i, {MonomialPrime(r, {0, 1})}, 4);
  const auto a = *MonomialIdeal::from_ideal(parse_ideal("ideal(x^2, x*y, y^2)", r));
  const auto b = *MonomialIdeal::from_ideal(parse_ideal("ideal(x^2, x*y, y^3)", r));
  const bool witness_ok = w.verdict == IndependenceVerdict::varies && w.witness && w.witness->intersection_a == a &&
                          w.witness->intersection_b == b;
  v.require(witness_ok, "curated witness");
  v.detail << "curated witness " << (witness_ok ? a.to_string() + " != " + b.to_string() : "missing") << " ";
}

void criterion_canonical_qx(Verdict& v) {
  const auto t = run_independence_suite(nullptr, &v);
  v.require(t.qx_checked == t.open, "an open subset had no invariant intersection");
  v.detail << t.qx_checked << " open subsets, " << t.qx_failed << " disagreements ";
}

MonomialIdeal growth_ideal() {
  return *MonomialIdeal::from_ideal(parse_ideal("ideal(x^2, x*y)", testing::ring_with(2)));
}

GrowthReport growth_n8;

void criterion_growth(Verdict& v) {
  const auto start = Clock::now();
  const auto i = growth_ideal();
  const MonomialPrime xy(i.ring(), {0, 1});
  growth_n8 = linear_growth_experiment({i}, 8);
  const auto n4 = linear_growth_experiment({i}, 4);
  for (const auto& p : growth_n8.points) {
    bool found = false;
    for (const auto& rec : p.primes)
      if (rec.prime == xy) {
        found = true;
        v.require(rec.min_power == 2 * p.total, "m(n) != 2n at n = " + std::to_string(p.total));
      }
    v.require(found, "(x, y) missing at n = " + std::to_string(p.total));
  }
  v.require(growth_n8.points.size() == 8, "grid size");
  v.require(growth_n8.k_empirical == 2, "k_empirical at n_max 8");
  v.require(n4.k_empirical == growth_n8.k_empirical, "k_empirical changed between n_max 4 and 8");
  v.require(growth_n8.all_verified && n4.all_verified, "constructed decompositions");
  const double elapsed = seconds_since(start);
  v.require(elapsed < 30.0, "runtime over 30 s");
  v.detail << "m_(x,y)(n) = 2n for n = 1..8, k_empirical " << n4.k_empirical << " (n_max 4) and "
           << growth_n8.k_empirical << " (n_max 8), " << elapsed << " s < 30 s ";
}

void check_identity_on(const GrowthReport& report, Verdict& v, std::size_t& checks, bool groebner_cross_check) {
  for (const auto& p : report.points) {
    v.require(!p.skipped && p.product.has_value(), "skipped grid point");
    if (!p.product) continue;
    for (const auto& rec : p.primes) {
      const auto prime = rec.prime.ideal();
      const std::span<const std::uint32_t> n(p.exponents);
      v.require(thm33_identity_check(report.ideals, n, prime, report.k_empirical),
                "identity fails at k_empirical for " + rec.prime.to_string());
      v.require(identity_holds_at_power(*p.product, prime, rec.min_power), "identity fails at m_P(n)");
      v.require(!identity_holds_at_power(*p.product, prime, rec.min_power - 1), "identity holds at m_P(n) - 1");
      if (groebner_cross_check && p.total <= 3) {
        std::vector<Ideal> ideals;
        for (const auto& i : report.ideals) ideals.push_back(i.to_ideal());
        v.require(thm33_identity_check(ideals, n, prime.to_ideal(), report.k_empirical),
                  "Groebner path disagrees at k_empirical");
        v.require(!identity_holds_at_power(p.product->to_ideal(), prime.to_ideal(), rec.min_power - 1),
                  "Groebner path disagrees at m_P(n) - 1");
      }
      checks += 1;
    }
  }
}

void criterion_identity(Verdict& v) {
  if (growth_n8.points.empty()) growth_n8 = linear_growth_experiment({growth_ideal()}, 8);
  std::size_t checks = 0;
  check_identity_on(growth_n8, v, checks, true);
  const auto r = testing::ring_with(2);
  const auto x = *MonomialIdeal::from_ideal(parse_ideal("ideal(x)", r));
  const auto y = *MonomialIdeal::from_ideal(parse_ideal("ideal(y)", r));
  const auto two = linear_growth_experiment({x, y}, 3);
  v.require(two.points.size() == 15, "two-ideal grid size");
  check_identity_on(two, v, checks, true);
  v.detail << checks << " (grid point, prime) pairs hold at k_empirical and fail at m_P(n) - 1 ";
}

void criterion_artin_rees(Verdict& v) {
  const auto r = testing::ring_with(2);
  const auto a = ar_number(parse_ideal("ideal(x)", r), parse_ideal("ideal(x)", r), 12);
  const auto b = ar_number(parse_ideal("ideal(x)", r), parse_ideal("ideal(y)", r), 12);
  v.require(a.k == 1 && a.status == ARStatus::verified_on_window, "AR((x), (x)) != 1");
  v.require(b.k == 0 && b.status == ARStatus::verified_on_window, "AR((x), (y)) != 0");
  v.detail << "AR((x),(x)) = " << a.k << ", AR((x),(y)) = " << b.k << " on window horizon 12; ";

  std::mt19937_64 rng(6006);
  std::size_t chains = 0, failed = 0;
  while (chains < 60) {
    const auto ring = testing::ring_with(testing::uniform(rng, 2, 3));
    const auto j = testing::random_monomial_ideal_in(rng, ring, 3, 2);
    const auto l = testing::random_monomial_ideal_in(rng, ring, 3, 3);
    const auto k = mono_product(l, testing::random_monomial_ideal_in(rng, ring, 2, 2));
    const auto unit = MonomialIdeal::unit(ring);
    const auto kl = ar_number(j, k, l, 12).k;
    const auto lr = ar_number(j, l, unit, 12).k;
    const auto kr = ar_number(j, k, unit, 12).k;
    const bool ok = kr <= kl + lr && ar_verify(j, k, unit, kl + lr, 12).status == ARStatus::verified_on_window;
    ++chains;
    if (!ok) {
      ++failed;
      v.require(false, "chain " + k.to_string() + " in " + l.to_string() + " with J = " + j.to_string());
    }
  }
  v.detail << "subadditivity on " << chains << " chains, " << failed << " failures ";
}

void criterion_cross_oracle(Verdict& v) {
  std::mt19937_64 rng(7007);
  std::size_t instances = 0, failed = 0;
  for (; instances < 110; ++instances) {
    const auto a = testing::random_monomial_ideal(rng, {2, 4, 4, 6});
    const auto b = testing::random_monomial_ideal_in(rng, a.ring(), 3, 3);
    const Ideal ga = a.to_ideal(), gb = b.to_ideal();
    bool ok = MonomialIdeal::from_ideal(intersect(ga, gb)) == mono_intersect(a, b) &&
              MonomialIdeal::from_ideal(quotient(ga, gb)) == mono_quotient(a, b);
    const auto gs = saturate(ga, gb);
    const auto ms = mono_saturate(a, b);
    ok = ok && MonomialIdeal::from_ideal(gs.ideal) == ms.ideal && gs.exponent == ms.exponent;

    const auto dec = primary_decomposition(a);
    MonomialIdeal mono_back = MonomialIdeal::unit(a.ring());
    Ideal groebner_back = Ideal::unit(a.ring());
    for (const auto& c : dec.components) {
      mono_back = mono_intersect(mono_back, c.component);
      groebner_back = intersect(groebner_back, c.component.to_ideal());
    }
    ok = ok && mono_back == a && ideal_equal(groebner_back, ga);
    if (!ok) {
      ++failed;
      v.require(false, a.to_string() + " with " + b.to_string());
    }
  }
  v.detail << instances << " instances, " << failed << " disagreements ";
}

void criterion_kernel(Verdict& v, const std::vector<std::string>& unit_tests, Clock::time_point suite_start) {
  std::mt19937_64 rng(8008);
  std::size_t permutation_failures = 0;
  for (int t = 0; t < 60; ++t) {
    const auto r = testing::ring_with(testing::uniform(rng, 2, 3));
    std::vector<Polynomial> gens;
    const auto count = testing::uniform(rng, 2, 4);
    for (std::size_t k = 0; k < count; ++k) gens.push_back(testing::random_polynomial(rng, r, 3, 3));
    const auto reference = Ideal(r, gens).groebner_basis();
    for (int s = 0; s < 3; ++s) {
      std::shuffle(gens.begin(), gens.end(), rng);
      if (Ideal(r, gens).groebner_basis() != reference) ++permutation_failures;
    }
  }
  v.require(permutation_failures == 0, "GB depends on generator order");

  std::size_t round_trip_failures = 0;
  for (int t = 0; t < 200; ++t) {
    const auto r = testing::ring_with(testing::uniform(rng, 1, 4));
    std::vector<Polynomial> gens;
    const auto count = testing::uniform(rng, 1, 4);
    for (std::size_t k = 0; k < count; ++k) gens.push_back(testing::random_polynomial(rng, r, 4, 5));
    const std::string text = Ideal(r, gens).to_string();
    if (parse_ideal(text, r).to_string() != text) ++round_trip_failures;
  }
  v.require(round_trip_failures == 0, "parse/print round trip");

  for (const auto& exe : unit_tests) {
    const std::string cmd = "\"" + exe + "\" > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) v.require(false, "unit tests failed: " + exe);
  }
  const double elapsed = seconds_since(suite_start);
  v.require(elapsed < 300.0, "full suite over 5 minutes");
  v.detail << "60 ideals x 3 permutations, " << permutation_failures << " GB differences; 200 round trips, "
           << round_trip_failures << " mismatches; acceptance plus " << unit_tests.size()
           << " unit-test binaries in " << elapsed << " s < 300 s ";
}

}  // namespace

int main(int argc, char** argv) {
  const auto suite_start = Clock::now();
  const std::vector<std::string> unit_tests(argv + 1, argv + argc);
  report("C1", "compatibility suite", criterion_compatibility);
  report("C2", "independence iff openness", criterion_independence);
  report("C3", "canonical Q_X", criterion_canonical_qx);
  report("C4", "linear growth closed form", criterion_growth);
  report("C5", "saturation intersection identity", criterion_identity);
  report("C6", "Artin-Rees numbers", criterion_artin_rees);
  report("C7", "cross-oracle equivalence", criterion_cross_oracle);
  report("C8", "kernel correctness",
         [&](Verdict& v) { criterion_kernel(v, unit_tests, suite_start); });
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
