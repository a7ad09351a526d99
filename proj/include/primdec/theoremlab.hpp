#pragma once

// Mechanical checks of the structure theory of primary components on concrete
// ideals: compatibility of arbitrary component choices, independence over
// subsets of Ass(R/I) versus openness, Artin-Rees numbers, the saturation
// intersection identity, and linear growth of component powers.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "primdec/idealops.hpp"
#include "primdec/monomial.hpp"

namespace primdec {

// ---------------------------------------------------------------------------
// Ideal algebra policies. The identity checks and Artin-Rees search below are
// written once and run on either the Groebner path or the monomial fast path.

template <class IdealT>
struct IdealAlgebra;

template <>
struct IdealAlgebra<Ideal> {
  static Ideal unit(const RingPtr& ring) { return Ideal::unit(ring); }
  static Ideal sum(const Ideal& a, const Ideal& b) { return primdec::sum(a, b); }
  static Ideal product(const Ideal& a, const Ideal& b) { return primdec::product(a, b); }
  static Ideal power(const Ideal& a, std::uint32_t n) { return primdec::power(a, n); }
  static Ideal intersect(const Ideal& a, const Ideal& b) { return primdec::intersect(a, b); }
  static Ideal saturate(const Ideal& a, const Ideal& b) { return primdec::saturate(a, b).ideal; }
  static bool equal(const Ideal& a, const Ideal& b) { return ideal_equal(a, b); }
  static bool subset(const Ideal& a, const Ideal& b) { return is_subset(a, b); }
  static bool is_zero(const Ideal& a) { return a.is_zero(); }
  static bool is_unit(const Ideal& a) { return a.is_unit(); }
  static Ideal to_ideal(const Ideal& a) { return a; }
};

template <>
struct IdealAlgebra<MonomialIdeal> {
  static MonomialIdeal unit(const RingPtr& ring) { return MonomialIdeal::unit(ring); }
  static MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) { return mono_sum(a, b); }
  static MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) { return mono_product(a, b); }
  static MonomialIdeal power(const MonomialIdeal& a, std::uint32_t n) { return mono_power(a, n); }
  static MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) { return mono_intersect(a, b); }
  static MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& b) { return mono_saturate(a, b).ideal; }
  static bool equal(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }
  static bool subset(const MonomialIdeal& a, const MonomialIdeal& b) { return b.contains(a); }
  static bool is_zero(const MonomialIdeal& a) { return a.is_zero(); }
  static bool is_unit(const MonomialIdeal& a) { return a.is_unit(); }
  static Ideal to_ideal(const MonomialIdeal& a) { return a.to_ideal(); }
};

// ---------------------------------------------------------------------------
// Compatibility

/// Ass(R/I) with its containment relation.
struct AssPoset {
  std::vector<MonomialPrime> primes;
  /// (a, b) means primes[a] ⊆ primes[b]; reflexive and transitive.
  std::vector<std::pair<std::size_t, std::size_t>> containment;

  static AssPoset from_primes(std::vector<MonomialPrime> primes) {
    std::sort(primes.begin(), primes.end());
    AssPoset poset{std::move(primes), {}};
    for (std::size_t a = 0; a < poset.primes.size(); ++a)
      for (std::size_t b = 0; b < poset.primes.size(); ++b)
        if (poset.primes[b].contains(poset.primes[a])) poset.containment.emplace_back(a, b);
    return poset;
  }

  static AssPoset of(const MonomialIdeal& ideal) { return from_primes(associated_primes(ideal)); }

  bool has(const MonomialPrime& p) const { return std::find(primes.begin(), primes.end(), p) != primes.end(); }
};

struct CompatibilityReport {
  MonomialIdeal ideal;
  std::vector<PrimaryComponent> picks;
  MonomialIdeal intersection;
  bool equal = false;
  bool irredundant = false;
  bool minimal = false;

  bool compatible() const { return equal && irredundant && minimal; }
};

/// Intersects one chosen P-primary component per associated prime and checks
/// that the result is the ideal again, irredundantly.
inline CompatibilityReport check_compatibility(const MonomialIdeal& ideal, const PrimaryDecomposition& dec,
                                               std::vector<PrimaryComponent> picks) {
  std::sort(picks.begin(), picks.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
  const auto primes = dec.primes();
  if (picks.size() != primes.size())
    throw PreconditionError("compatibility needs exactly one pick per associated prime");
  for (std::size_t i = 0; i < picks.size(); ++i) {
    const auto& pick = picks[i];
    if (!(pick.prime == primes[i])) throw PreconditionError(pick.prime.to_string() + " is not matched to an associated prime");
    if (!pick.component.is_proper_nonzero()) throw PreconditionError("pick " + pick.component.to_string() + " is not proper");
    auto p = is_primary(pick.component);
    if (!p || !(*p == pick.prime))
      throw PreconditionError("pick " + pick.component.to_string() + " is not " + pick.prime.to_string() + "-primary");
    if (!pick.component.contains(ideal))
      throw PreconditionError("pick " + pick.component.to_string() + " does not contain " + ideal.to_string());
    if (!is_lambda_member(ideal, dec, pick.prime, pick.component))
      throw PreconditionError("pick " + pick.component.to_string() + " is not a primary component of " + ideal.to_string());
  }

  CompatibilityReport report{ideal, picks, MonomialIdeal::unit(ideal.ring())};
  for (const auto& p : picks) report.intersection = mono_intersect(report.intersection, p.component);
  report.equal = report.intersection == ideal;
  report.irredundant = true;
  for (std::size_t i = 0; i < picks.size(); ++i) {
    MonomialIdeal others = MonomialIdeal::unit(ideal.ring());
    for (std::size_t j = 0; j < picks.size(); ++j)
      if (j != i) others = mono_intersect(others, picks[j].component);
    if (others == report.intersection) report.irredundant = false;
  }
  report.minimal = true;
  for (std::size_t i = 1; i < picks.size(); ++i)
    if (picks[i].prime == picks[i - 1].prime) report.minimal = false;
  return report;
}

inline CompatibilityReport check_compatibility(const MonomialIdeal& ideal, std::vector<PrimaryComponent> picks) {
  return check_compatibility(ideal, primary_decomposition(ideal), std::move(picks));
}

// ---------------------------------------------------------------------------
// Independence and openness

namespace detail {

inline void require_subset(const std::vector<MonomialPrime>& subset, const AssPoset& ass) {
  for (const auto& p : subset)
    if (!ass.has(p)) throw PreconditionError(p.to_string() + " is not an associated prime");
}

}  // namespace detail

/// X is open in Ass iff it is closed under passing to smaller associated primes.
inline bool is_open_subset(const std::vector<MonomialPrime>& subset, const AssPoset& ass) {
  detail::require_subset(subset, ass);
  auto in_subset = [&](const MonomialPrime& p) { return std::find(subset.begin(), subset.end(), p) != subset.end(); };
  for (const auto& p : subset)
    for (const auto& q : ass.primes)
      if (p.contains(q) && !in_subset(q)) return false;
  return true;
}

enum class IndependenceVerdict { invariant, varies };

struct IndependenceReport {
  std::vector<MonomialPrime> subset;
  std::uint32_t sample_depth = 0;
  std::uint64_t seed = 0;
  /// Least admissible power per prime of the subset (same order as `subset`).
  std::vector<std::uint32_t> thresholds;
  std::size_t intersections_checked = 0;
  IndependenceVerdict verdict = IndependenceVerdict::invariant;
  /// The common intersection when the verdict is invariant.
  std::optional<MonomialIdeal> invariant_intersection;

  struct Witness {
    std::vector<std::uint32_t> powers_a;
    MonomialIdeal intersection_a;
    std::vector<std::uint32_t> powers_b;
    MonomialIdeal intersection_b;
  };
  std::optional<Witness> witness;
};

/// Samples P-primary components (I + P^n localized at P, n over sample_depth
/// consecutive admissible powers) for every P in X and compares all
/// intersections over X. At most `max_combinations` pick vectors are tried;
/// beyond that a seeded subsample is used.
inline IndependenceReport check_independence(const MonomialIdeal& ideal, const PrimaryDecomposition& dec,
                                             std::vector<MonomialPrime> subset, std::uint32_t sample_depth,
                                             std::uint64_t seed = 0, std::size_t max_combinations = 4096) {
  if (sample_depth == 0) throw PreconditionError("sample_depth must be positive");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  detail::require_subset(subset, AssPoset::from_primes(dec.primes()));

  IndependenceReport report;
  report.subset = subset;
  report.sample_depth = sample_depth;
  report.seed = seed;

  std::vector<std::vector<MonomialIdeal>> candidates;
  for (const auto& p : subset) {
    const auto n0 = lambda_threshold(ideal, dec, p);
    report.thresholds.push_back(n0);
    std::vector<MonomialIdeal> family;
    for (std::uint32_t n = n0; n < n0 + sample_depth; ++n) family.push_back(lambda_candidates(ideal, dec, p, n));
    candidates.push_back(std::move(family));
  }

  std::size_t total = 1;
  for (const auto& c : candidates) {
    total *= c.size();
    if (total > max_combinations) break;
  }

  auto intersection_for = [&](const std::vector<std::size_t>& choice) {
    MonomialIdeal acc = MonomialIdeal::unit(ideal.ring());
    for (std::size_t i = 0; i < choice.size(); ++i) acc = mono_intersect(acc, candidates[i][choice[i]]);
    return acc;
  };
  auto powers_for = [&](const std::vector<std::size_t>& choice) {
    std::vector<std::uint32_t> powers;
    for (std::size_t i = 0; i < choice.size(); ++i) powers.push_back(report.thresholds[i] + static_cast<std::uint32_t>(choice[i]));
    return powers;
  };

  std::vector<std::vector<std::size_t>> choices;
  if (total <= max_combinations) {
    std::vector<std::size_t> choice(subset.size(), 0);
    while (true) {
      choices.push_back(choice);
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == candidates[i].size()) choice[i++] = 0;
      if (i == choice.size()) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    choices.emplace_back(subset.size(), 0);
    while (choices.size() < max_combinations) {
      std::vector<std::size_t> choice;
      for (const auto& c : candidates) choice.push_back(std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng));
      choices.push_back(std::move(choice));
    }
  }

  const MonomialIdeal reference = intersection_for(choices.front());
  report.intersections_checked = 1;
  for (std::size_t c = 1; c < choices.size(); ++c) {
    MonomialIdeal other = intersection_for(choices[c]);
    ++report.intersections_checked;
    if (!(other == reference)) {
      report.verdict = IndependenceVerdict::varies;
      report.witness = IndependenceReport::Witness{powers_for(choices.front()), reference, powers_for(choices[c]), other};
      return report;
    }
  }
  report.invariant_intersection = reference;
  return report;
}

inline IndependenceReport check_independence(const MonomialIdeal& ideal, std::vector<MonomialPrime> subset,
                                             std::uint32_t sample_depth, std::uint64_t seed = 0) {
  return check_independence(ideal, primary_decomposition(ideal), std::move(subset), sample_depth, seed);
}

/// Q_X = (I : J^∞) with J the intersection of the associated primes outside X.
/// Refuses non-open X, where no choice-independent intersection exists.
inline Ideal canonical_qx(const MonomialIdeal& ideal, const std::vector<MonomialPrime>& subset) {
  if (subset.empty()) throw PreconditionError("canonical_qx needs a nonempty subset");
  const AssPoset ass = AssPoset::of(ideal);
  if (!is_open_subset(subset, ass)) throw PreconditionError("subset is not open in Ass; Q_X is not well defined");
  MonomialIdeal j = MonomialIdeal::unit(ideal.ring());
  for (const auto& p : ass.primes)
    if (std::find(subset.begin(), subset.end(), p) == subset.end()) j = mono_intersect(j, p.ideal());
  return saturate(ideal.to_ideal(), j.to_ideal()).ideal;
}

// ---------------------------------------------------------------------------
// Artin-Rees numbers

enum class ARStatus { verified_on_window, falsified_at };

struct ARReport {
  Ideal j;
  Ideal n_ideal;
  Ideal ambient;
  std::uint32_t k = 0;
  std::uint32_t window_start = 0;
  std::uint32_t window_end = 0;
  ARStatus status = ARStatus::verified_on_window;
  /// For verified reports: an n at which k - 1 fails. For falsified: the failing n.
  std::optional<std::uint32_t> witness_n;
};

namespace detail {

template <class IdealT>
class PowerCache {
 public:
  explicit PowerCache(const IdealT& base) : base_(base), powers_{IdealAlgebra<IdealT>::unit(base.ring())} {}
  const IdealT& operator()(std::uint32_t n) {
    while (powers_.size() <= n) powers_.push_back(IdealAlgebra<IdealT>::product(powers_.back(), base_));
    return powers_[n];
  }

 private:
  IdealT base_;
  std::vector<IdealT> powers_;
};

// J^n L ∩ K ⊆ J^{n-k} K
template <class IdealT>
bool ar_containment(PowerCache<IdealT>& jpow, const IdealT& k_ideal, const IdealT& ambient, std::uint32_t n,
                    std::uint32_t k) {
  using A = IdealAlgebra<IdealT>;
  const IdealT lhs = A::intersect(A::product(jpow(n), ambient), k_ideal);
  return A::subset(lhs, A::product(jpow(n - k), k_ideal));
}

}  // namespace detail

/// Checks J^n L ∩ K ⊆ J^{n-k} K for n = k .. k + horizon.
template <class IdealT>
ARReport ar_verify(const IdealT& j, const IdealT& k_ideal, const IdealT& ambient, std::uint32_t k, std::uint32_t horizon) {
  using A = IdealAlgebra<IdealT>;
  detail::PowerCache<IdealT> jpow(j);
  ARReport report{A::to_ideal(j), A::to_ideal(k_ideal), A::to_ideal(ambient), k, k, k + horizon};
  for (std::uint32_t n = k; n <= k + horizon; ++n)
    if (!detail::ar_containment(jpow, k_ideal, ambient, n, k)) {
      report.status = ARStatus::falsified_at;
      report.witness_n = n;
      return report;
    }
  return report;
}

/// Least k such that J^n L ∩ K ⊆ J^{n-k} K for every n in the window
/// [k, k + horizon]. A window-verified value, not a certificate over all n.
template <class IdealT>
ARReport ar_number(const IdealT& j, const IdealT& k_ideal, const IdealT& ambient, std::uint32_t horizon = 12,
                   std::uint32_t k_cap = 64) {
  using A = IdealAlgebra<IdealT>;
  if (horizon == 0) throw PreconditionError("ar_number needs horizon >= 1");
  if (A::is_zero(j) || A::is_unit(j)) throw PreconditionError("ar_number needs J nonzero and proper");
  if (A::is_zero(k_ideal) || A::is_unit(k_ideal)) throw PreconditionError("ar_number needs N nonzero and proper");
  if (!A::subset(k_ideal, ambient)) throw PreconditionError("ar_number needs N inside the ambient ideal");
  std::optional<std::uint32_t> last_failure;
  for (std::uint32_t k = 0; k <= k_cap; ++k) {
    ARReport report = ar_verify(j, k_ideal, ambient, k, horizon);
    if (report.status == ARStatus::verified_on_window) {
      report.witness_n = last_failure;
      return report;
    }
    last_failure = report.witness_n;
  }
  throw BudgetExceeded("no Artin-Rees number up to k = " + std::to_string(k_cap) + " on the verification window");
}

template <class IdealT>
ARReport ar_number(const IdealT& j, const IdealT& n_ideal, std::uint32_t horizon = 12) {
  return ar_number(j, n_ideal, IdealAlgebra<IdealT>::unit(j.ring()), horizon);
}

// ---------------------------------------------------------------------------
// The saturation intersection identity and linear growth

/// (J^power + T) ∩ (T : J^∞) = T.
template <class IdealT>
bool identity_holds_at_power(const IdealT& target, const IdealT& j, std::uint32_t power) {
  using A = IdealAlgebra<IdealT>;
  const IdealT lhs = A::intersect(A::sum(A::power(j, power), target), A::saturate(target, j));
  return A::equal(lhs, target);
}

template <class IdealT>
IdealT product_of_powers(const std::vector<IdealT>& ideals, std::span<const std::uint32_t> exponents) {
  using A = IdealAlgebra<IdealT>;
  if (ideals.empty()) throw PreconditionError("need at least one ideal");
  if (ideals.size() != exponents.size()) throw DimensionMismatch("one exponent per ideal is required");
  IdealT t = A::unit(ideals.front().ring());
  for (std::size_t i = 0; i < ideals.size(); ++i) t = A::product(t, A::power(ideals[i], exponents[i]));
  return t;
}

inline std::uint32_t total_degree(std::span<const std::uint32_t> exponents) {
  std::uint32_t s = 0;
  for (auto e : exponents) s += e;
  return s;
}

/// With T = ∏ I_i^{n_i}: (J^{k|n|} + T) ∩ (T : J^∞) = T.
template <class IdealT>
bool thm33_identity_check(const std::vector<IdealT>& ideals, std::span<const std::uint32_t> exponents, const IdealT& j,
                          std::uint32_t k) {
  const IdealT t = product_of_powers(ideals, exponents);
  return identity_holds_at_power(t, j, k * total_degree(exponents));
}

/// Least m >= 1 with (P^m + I) ∩ (I : P^∞) = I; the P-primary component of
/// P^m + I is then a P-primary component of I containing P^m.
inline std::uint32_t min_power_for_primary(const MonomialIdeal& ideal, const MonomialPrime& prime,
                                           std::uint32_t cap = 256) {
  const auto ass = associated_primes(ideal);
  if (std::find(ass.begin(), ass.end(), prime) == ass.end())
    throw PreconditionError(prime.to_string() + " is not an associated prime of " + ideal.to_string());
  const MonomialIdeal p = prime.ideal();
  const MonomialIdeal saturated = mono_saturate(ideal, p).ideal;
  MonomialIdeal pm = MonomialIdeal::unit(ideal.ring());
  for (std::uint32_t m = 1; m <= cap; ++m) {
    pm = mono_product(pm, p);
    if (mono_intersect(mono_sum(pm, ideal), saturated) == ideal) return m;
  }
  throw BudgetExceeded("min_power_for_primary exceeded cap " + std::to_string(cap));
}

struct GrowthPrimeRecord {
  MonomialPrime prime;
  /// Constructive minimum: least m passing the identity with J = P.
  std::uint32_t min_power = 0;
  /// Least m with P^m inside the largest member of the localized family.
  std::uint32_t family_min_power = 0;
  bool identity_at_min = false;
  bool fails_below_min = false;
  /// P-primary component built at power k_empirical·|n|.
  std::optional<MonomialIdeal> component;
};

struct GrowthPoint {
  std::vector<std::uint32_t> exponents;
  std::uint32_t total = 0;
  std::optional<MonomialIdeal> product;
  std::vector<GrowthPrimeRecord> primes;
  /// The constructed components intersect back to the product, irredundantly.
  bool decomposition_verified = false;
  bool skipped = false;
  std::string error;
};

struct GrowthOptions {
  std::uint64_t seed = 0;
  std::uint32_t power_cap = 256;
};

struct GrowthReport {
  std::vector<MonomialIdeal> ideals;
  std::uint32_t n_max = 0;
  std::uint64_t seed = 0;
  std::vector<GrowthPoint> points;
  std::uint32_t k_empirical = 0;
  bool all_verified = false;
};

/// Every exponent tuple in {0..n_max}^t except zero, in lexicographic order.
inline std::vector<std::vector<std::uint32_t>> growth_grid(std::size_t t, std::uint32_t n_max) {
  std::vector<std::vector<std::uint32_t>> grid;
  std::vector<std::uint32_t> n(t, 0);
  while (true) {
    std::size_t i = t;
    while (i > 0 && n[i - 1] == n_max) n[--i] = 0;
    if (i == 0) break;
    ++n[i - 1];
    grid.push_back(n);
  }
  return grid;
}

/// For each grid point n and each associated prime P of T = ∏ I_i^{n_i}, the
/// least power m_P(n) admitting a P-primary component containing P^{m}; the
/// empirical slope k = max ⌈m_P(n)/|n|⌉; and, per point, an explicit
/// decomposition whose P-component contains P^{k|n|}.
inline GrowthReport linear_growth_experiment(const std::vector<MonomialIdeal>& ideals, std::uint32_t n_max,
                                             const GrowthOptions& options = {}) {
  if (ideals.empty()) throw PreconditionError("linear_growth_experiment needs at least one ideal");
  if (n_max == 0) throw PreconditionError("linear_growth_experiment needs n_max >= 1");
  for (const auto& i : ideals) require_same_variables(ideals.front().ring(), i.ring());

  GrowthReport report{ideals, n_max, options.seed};
  for (auto& n : growth_grid(ideals.size(), n_max)) {
    GrowthPoint point;
    point.exponents = n;
    point.total = total_degree(n);
    try {
      const MonomialIdeal t = product_of_powers(ideals, std::span<const std::uint32_t>(n));
      point.product = t;
      if (t.is_unit() || t.is_zero()) {
        point.skipped = true;
        point.error = "product ideal is not proper and nonzero";
      } else {
        const auto dec = primary_decomposition(t);
        for (const auto& c : dec.components) {
          GrowthPrimeRecord rec{c.prime};
          rec.min_power = min_power_for_primary(t, c.prime, options.power_cap);
          const MonomialIdeal p = c.prime.ideal();
          rec.identity_at_min = identity_holds_at_power(t, p, rec.min_power);
          rec.fails_below_min = !identity_holds_at_power(t, p, rec.min_power - 1);
          const MonomialIdeal largest = lambda_candidates(t, dec, c.prime, lambda_threshold(t, dec, c.prime));
          MonomialIdeal pm = p;
          rec.family_min_power = 1;
          while (!largest.contains(pm)) {
            pm = mono_product(pm, p);
            ++rec.family_min_power;
          }
          point.primes.push_back(std::move(rec));
        }
      }
    } catch (const Error& e) {
      point.skipped = true;
      point.error = std::string(e.error_class()) + ": " + e.what();
    }
    report.points.push_back(std::move(point));
  }

  for (const auto& point : report.points)
    for (const auto& rec : point.primes)
      report.k_empirical = std::max(report.k_empirical, (rec.min_power + point.total - 1) / point.total);

  report.all_verified = true;
  for (auto& point : report.points) {
    if (point.skipped) {
      report.all_verified = false;
      continue;
    }
    try {
      const MonomialIdeal& t = *point.product;
      const auto dec = primary_decomposition(t);
      std::vector<PrimaryComponent> picks;
      for (auto& rec : point.primes) {
        rec.component = lambda_candidates(t, dec, rec.prime, report.k_empirical * point.total);
        picks.push_back({rec.prime, *rec.component});
      }
      point.decomposition_verified = check_compatibility(t, dec, std::move(picks)).compatible();
    } catch (const Error& e) {
      point.decomposition_verified = false;
      point.error = std::string(e.error_class()) + ": " + e.what();
    }
    for (const auto& rec : point.primes)
      if (!rec.identity_at_min || !rec.fails_below_min) point.decomposition_verified = false;
    report.all_verified = report.all_verified && point.decomposition_verified;
  }
  return report;
}

}  // namespace primdec
