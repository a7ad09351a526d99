#pragma once

// Monomial ideals: combinatorial intersection, quotient and saturation,
// irreducible and primary decomposition, associated primes, and the
// one-parameter family of P-primary components obtained by localizing I + P^n.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "primdec/groebner.hpp"
#include "primdec/polyring.hpp"

namespace primdec {

/// Monomial ideal stored by its minimal generators, sorted in decreasing ring order.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {}

  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    for (const auto& g : gens)
      if (g.size() != ring_->nvars()) throw DimensionMismatch("generator length does not match ring");
    gens_ = minimalize(std::move(gens));
  }

  static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring)); }
  static MonomialIdeal unit(RingPtr ring) {
    Monomial one(ring->nvars());
    return MonomialIdeal(std::move(ring), {one});
  }

  /// Returns the ideal as a monomial ideal when its reduced Groebner basis is monomial.
  static std::optional<MonomialIdeal> from_ideal(const Ideal& ideal) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.groebner_basis()) {
      if (!g.is_monomial()) return std::nullopt;
      gens.push_back(g.leading_monomial());
    }
    return MonomialIdeal(ideal.ring(), std::move(gens));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  /// other ⊆ this.
  bool contains(const MonomialIdeal& other) const {
    require_same_variables(ring_, other.ring_);
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
  }

  Ideal to_ideal() const {
    std::vector<Polynomial> gens;
    for (const auto& g : gens_) gens.push_back(Polynomial::monomial(ring_, g));
    return Ideal(ring_, std::move(gens));
  }

  std::string to_string() const {
    std::string s = "ideal(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + monomial_to_string(gens_[i], *ring_);
    return s + ")";
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_->same_variables(*b.ring_) && a.gens_ == b.gens_;
  }

  /// Canonical order on ideals: generator lists compared term by term in ring order.
  friend bool canonical_less(const MonomialIdeal& a, const MonomialIdeal& b) {
    const auto& order = a.ring_->order();
    const std::size_t n = std::min(a.gens_.size(), b.gens_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = order.compare(a.gens_[i], b.gens_[i]);
      if (c != 0) return c < 0;
    }
    return a.gens_.size() < b.gens_.size();
  }

 private:
  std::vector<Monomial> minimalize(std::vector<Monomial> gens) const {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      const auto da = a.degree(), db = b.degree();
      return da != db ? da < db : a < b;
    });
    std::vector<Monomial> kept;
    for (auto& g : gens) {
      bool redundant = false;
      for (const auto& k : kept)
        if (k.divides(g)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(std::move(g));
    }
    const auto& order = ring_->order();
    std::sort(kept.begin(), kept.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    return kept;
  }

  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// The prime generated by a nonempty subset of the ring variables.
class MonomialPrime {
 public:
  MonomialPrime(RingPtr ring, std::vector<std::size_t> vars) : ring_(std::move(ring)), vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    if (vars_.empty()) throw PreconditionError("a monomial prime needs at least one variable");
    if (vars_.back() >= ring_->nvars()) throw DimensionMismatch("prime variable index out of range");
  }

  /// Parses an ideal generated by distinct variables.
  static MonomialPrime from_ideal(const Ideal& ideal) {
    std::vector<std::size_t> vars;
    for (const auto& g : ideal.generators()) {
      if (!g.is_monomial() || g.leading_monomial().degree() != 1)
        throw PreconditionError("prime must be generated by variables, got " + g.to_string());
      const auto& m = g.leading_monomial();
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) vars.push_back(i);
    }
    return MonomialPrime(ideal.ring(), std::move(vars));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<std::size_t>& variables() const noexcept { return vars_; }

  bool has(std::size_t var) const { return std::binary_search(vars_.begin(), vars_.end(), var); }

  /// other ⊆ this.
  bool contains(const MonomialPrime& other) const {
    return std::includes(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end());
  }

  std::vector<std::size_t> complement() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (!has(i)) out.push_back(i);
    return out;
  }

  MonomialIdeal ideal() const {
    std::vector<Monomial> gens;
    for (auto v : vars_) {
      Monomial m(ring_->nvars());
      m[v] = 1;
      gens.push_back(std::move(m));
    }
    return MonomialIdeal(ring_, std::move(gens));
  }

  std::string to_string() const {
    std::string s = "ideal(";
    for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? ", " : "") + ring_->variables()[vars_[i]];
    return s + ")";
  }

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) { return a.vars_ == b.vars_; }
  friend auto operator<=>(const MonomialPrime& a, const MonomialPrime& b) { return a.vars_ <=> b.vars_; }

 private:
  RingPtr ring_;
  std::vector<std::size_t> vars_;
};

struct PrimaryComponent {
  MonomialPrime prime;
  MonomialIdeal component;
};

struct PrimaryDecomposition {
  std::vector<PrimaryComponent> components;
  bool irredundant = false;
  bool minimal = false;

  std::vector<MonomialPrime> primes() const {
    std::vector<MonomialPrime> out;
    for (const auto& c : components) out.push_back(c.prime);
    return out;
  }
};

inline MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_variables(a.ring(), b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

inline MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_variables(a.ring(), b.ring());
  std::vector<Monomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(mono_mul(f, g, a.ring()->exponent_cap()));
  return MonomialIdeal(a.ring(), std::move(gens));
}

inline MonomialIdeal mono_power(const MonomialIdeal& ideal, std::uint32_t n) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.ring());
  for (std::uint32_t i = 0; i < n; ++i) result = mono_product(result, ideal);
  return result;
}

/// Pairwise lcms, minimalized.
inline MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_variables(a.ring(), b.ring());
  std::vector<Monomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(mono_lcm(f, g));
  return MonomialIdeal(a.ring(), std::move(gens));
}

/// (I : m) = (g / gcd(g, m)).
inline MonomialIdeal mono_quotient(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(mono_colon(g, m));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

inline MonomialIdeal mono_quotient(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_variables(ideal.ring(), by.ring());
  if (by.is_zero()) throw PreconditionError("quotient by the zero ideal");
  MonomialIdeal result = MonomialIdeal::unit(ideal.ring());
  for (const auto& m : by.generators()) result = mono_intersect(result, mono_quotient(ideal, m));
  return result;
}

/// Saturation at the product of `vars`: zero their exponents in every generator.
inline MonomialIdeal mono_saturate_vars(const MonomialIdeal& ideal, const std::vector<std::size_t>& vars) {
  std::vector<Monomial> gens;
  for (auto g : ideal.generators()) {
    for (auto v : vars) {
      if (v >= g.size()) throw DimensionMismatch("saturation variable index out of range");
      g[v] = 0;
    }
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

struct MonomialSaturation {
  MonomialIdeal ideal;
  std::size_t exponent;
};

/// (I : J^∞) by iterated quotients, mirroring the Groebner-path saturate.
inline MonomialSaturation mono_saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  MonomialIdeal current = ideal;
  for (std::size_t i = 0;; ++i) {
    MonomialIdeal next = mono_quotient(current, by);
    if (next == current) return {std::move(next), i};
    current = std::move(next);
  }
}

namespace detail {

inline void split_irreducible(const MonomialIdeal& ideal, std::vector<MonomialIdeal>& out) {
  const auto& gens = ideal.generators();
  auto mixed = std::find_if(gens.begin(), gens.end(), [](const Monomial& m) { return m.support_size() >= 2; });
  if (mixed == gens.end()) {
    out.push_back(ideal);
    return;
  }
  // m = x_i^{a_i} · rest, with x_i the first variable in the support.
  Monomial head(mixed->size());
  std::size_t i = 0;
  while ((*mixed)[i] == 0) ++i;
  head[i] = (*mixed)[i];
  const Monomial rest = mono_div(*mixed, head);
  split_irreducible(mono_sum(ideal, MonomialIdeal(ideal.ring(), {head})), out);
  split_irreducible(mono_sum(ideal, MonomialIdeal(ideal.ring(), {rest})), out);
}

inline std::vector<std::size_t> support(const MonomialIdeal& ideal) {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < ideal.ring()->nvars(); ++v)
    for (const auto& g : ideal.generators())
      if (g[v] != 0) {
        vars.push_back(v);
        break;
      }
  return vars;
}

inline MonomialIdeal intersect_all(const RingPtr& ring, const std::vector<const MonomialIdeal*>& parts) {
  MonomialIdeal acc = MonomialIdeal::unit(ring);
  for (const auto* p : parts) acc = mono_intersect(acc, *p);
  return acc;
}

inline void require_proper_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (!ideal.is_proper_nonzero()) throw PreconditionError(std::string(op) + " needs a proper nonzero monomial ideal");
}

}  // namespace detail

/// Irredundant decomposition into ideals generated by pure powers of variables.
inline std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal) {
  detail::require_proper_nonzero(ideal, "irreducible_decomposition");
  std::vector<MonomialIdeal> raw;
  detail::split_irreducible(ideal, raw);
  // Canonical order: by variable support, then by generators.
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    const auto sa = detail::support(a), sb = detail::support(b);
    return sa != sb ? sa < sb : canonical_less(a, b);
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool superfluous = false;
    for (std::size_t j = 0; j < raw.size() && !superfluous; ++j)
      if (j != i && raw[i].contains(raw[j])) superfluous = true;
    if (!superfluous) out.push_back(raw[i]);
  }
  return out;
}

/// The prime Q is primary to, if Q is primary.
inline std::optional<MonomialPrime> is_primary(const MonomialIdeal& q) {
  detail::require_proper_nonzero(q, "is_primary");
  const auto vars = detail::support(q);
  for (auto v : vars) {
    const bool pure = std::any_of(q.generators().begin(), q.generators().end(),
                                  [&](const Monomial& g) { return g[v] != 0 && g.support_size() == 1; });
    if (!pure) return std::nullopt;
  }
  return MonomialPrime(q.ring(), vars);
}

inline std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  std::set<MonomialPrime> primes;
  for (const auto& c : irreducible_decomposition(ideal)) primes.insert(MonomialPrime(ideal.ring(), detail::support(c)));
  return {primes.begin(), primes.end()};
}

/// Irreducible components grouped by radical, one primary component per
/// associated prime, verified to intersect back to the input.
inline PrimaryDecomposition primary_decomposition(const MonomialIdeal& ideal) {
  const RingPtr& ring = ideal.ring();
  std::map<MonomialPrime, MonomialIdeal> groups;
  for (const auto& c : irreducible_decomposition(ideal)) {
    MonomialPrime p(ring, detail::support(c));
    auto it = groups.find(p);
    if (it == groups.end())
      groups.emplace(std::move(p), c);
    else
      it->second = mono_intersect(it->second, c);
  }
  PrimaryDecomposition dec;
  for (auto& [p, q] : groups) dec.components.push_back({p, q});

  std::vector<const MonomialIdeal*> all;
  for (const auto& c : dec.components) all.push_back(&c.component);
  if (!(detail::intersect_all(ring, all) == ideal))
    throw ConsistencyError("primary components of " + ideal.to_string() + " do not intersect back to it");

  dec.irredundant = true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<const MonomialIdeal*> others;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != i) others.push_back(all[j]);
    if (detail::intersect_all(ring, others) == ideal) dec.irredundant = false;
  }
  dec.minimal = true;
  for (const auto& c : dec.components) {
    auto p = is_primary(c.component);
    if (!p || !(*p == c.prime)) throw ConsistencyError("component " + c.component.to_string() + " is not primary to its prime");
  }
  return dec;
}

/// True when Q can serve as the P-primary component of some primary
/// decomposition of I: Q is P-primary, contains I, and replacing the
/// P-component of a known decomposition by Q still intersects to I.
inline bool is_lambda_member(const MonomialIdeal& ideal, const PrimaryDecomposition& dec, const MonomialPrime& prime,
                             const MonomialIdeal& q) {
  if (!q.is_proper_nonzero()) return false;
  auto p = is_primary(q);
  if (!p || !(*p == prime) || !q.contains(ideal)) return false;
  MonomialIdeal acc = q;
  bool found = false;
  for (const auto& c : dec.components) {
    if (c.prime == prime) {
      found = true;
      continue;
    }
    acc = mono_intersect(acc, c.component);
  }
  return found && acc == ideal;
}

namespace detail {

inline void require_associated(const PrimaryDecomposition& dec, const MonomialPrime& prime) {
  for (const auto& c : dec.components)
    if (c.prime == prime) return;
  throw PreconditionError(prime.to_string() + " is not an associated prime");
}

inline MonomialIdeal localized_power_sum(const MonomialIdeal& ideal, const MonomialPrime& prime, std::uint32_t n) {
  return mono_saturate_vars(mono_sum(ideal, mono_power(prime.ideal(), n)), prime.complement());
}

}  // namespace detail

/// (I + P^n) saturated at the variables outside P. Throws BelowThreshold when
/// n is too small for the result to be a P-primary component of I.
inline MonomialIdeal lambda_candidates(const MonomialIdeal& ideal, const PrimaryDecomposition& dec,
                                       const MonomialPrime& prime, std::uint32_t n) {
  if (n == 0) throw PreconditionError("lambda_candidates needs n >= 1");
  detail::require_associated(dec, prime);
  MonomialIdeal q = detail::localized_power_sum(ideal, prime, n);
  if (!is_lambda_member(ideal, dec, prime, q))
    throw BelowThreshold("n = " + std::to_string(n) + " is below the threshold for " + prime.to_string());
  return q;
}

inline MonomialIdeal lambda_candidates(const MonomialIdeal& ideal, const MonomialPrime& prime, std::uint32_t n) {
  return lambda_candidates(ideal, primary_decomposition(ideal), prime, n);
}

/// Least n for which lambda_candidates succeeds; scans n = 1..cap.
inline std::uint32_t lambda_threshold(const MonomialIdeal& ideal, const PrimaryDecomposition& dec,
                                      const MonomialPrime& prime, std::uint32_t cap = 64) {
  detail::require_associated(dec, prime);
  for (std::uint32_t n = 1; n <= cap; ++n)
    if (is_lambda_member(ideal, dec, prime, detail::localized_power_sum(ideal, prime, n))) return n;
  throw BudgetExceeded("no primary component for " + prime.to_string() + " up to n = " + std::to_string(cap));
}

inline std::uint32_t lambda_threshold(const MonomialIdeal& ideal, const MonomialPrime& prime, std::uint32_t cap = 64) {
  return lambda_threshold(ideal, primary_decomposition(ideal), prime, cap);
}

}  // namespace primdec
