#pragma once

// Buchberger's algorithm, normal forms and the ideal-membership kernel.

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "primdec/polyring.hpp"

namespace primdec {

struct GroebnerOptions {
  /// Upper bound on reduction steps (top reductions plus processed S-pairs).
  std::uint64_t step_budget = 20'000'000;
};

namespace detail {

inline std::atomic<bool>& gb_cache_flag() {
  static std::atomic<bool> enabled{true};
  return enabled;
}

inline std::atomic<std::uint64_t>& default_budget() {
  static std::atomic<std::uint64_t> budget{GroebnerOptions{}.step_budget};
  return budget;
}

class StepCounter {
 public:
  explicit StepCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++steps_ > budget_)
      throw BudgetExceeded("Groebner step budget of " + std::to_string(budget_) + " exhausted");
  }

 private:
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

// Full reduction of f by `basis`; the first divisor in list order wins.
inline Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, StepCounter* counter) {
  const RingPtr& ring = f.ring();
  const auto& order = ring->order();
  auto cmp = [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); };
  std::map<Monomial, Coeff, decltype(cmp)> work(cmp);
  for (const auto& t : f.terms()) work.emplace(t.mono, t.coeff);

  std::vector<Term> remainder;
  while (!work.empty()) {
    auto top = work.begin();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(top->first)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back({top->first, top->second});
      work.erase(top);
      continue;
    }
    if (counter) counter->tick();
    const Monomial shift = mono_div(top->first, divisor->leading_monomial());
    const Coeff factor = top->second / divisor->leading_coeff();
    work.erase(top);
    const auto& dterms = divisor->terms();
    for (std::size_t i = 1; i < dterms.size(); ++i) {
      Monomial m = mono_mul(dterms[i].mono, shift, ring->exponent_cap());
      auto [it, inserted] = work.try_emplace(std::move(m), 0);
      it->second -= factor * dterms[i].coeff;
      if (it->second == 0) work.erase(it);
    }
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(mono_div(l, f.leading_monomial()), 1 / f.leading_coeff()) -
         g.times_term(mono_div(l, g.leading_monomial()), 1 / g.leading_coeff());
}

// Drops redundant leading monomials, reduces tails, makes monic and sorts.
inline std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, StepCounter* counter) {
  if (basis.empty()) return basis;
  const auto& order = basis.front().ring()->order();
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(b.leading_monomial(), a.leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(j < i ? reduced[j] : minimal[j]);
    const auto& g = minimal[i];
    const Term& lt = g.leading_term();
    Polynomial tail = g - Polynomial::monomial(g.ring(), lt.mono, lt.coeff);
    Polynomial r = Polynomial::monomial(g.ring(), lt.mono, lt.coeff) + reduce(tail, others, counter);
    reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

}  // namespace detail

/// Globally enables or disables Groebner-basis caching on Ideal values.
inline void set_gb_cache_enabled(bool on) { detail::gb_cache_flag() = on; }
inline bool gb_cache_enabled() { return detail::gb_cache_flag(); }

/// Step budget used when no explicit GroebnerOptions are passed.
inline void set_default_step_budget(std::uint64_t budget) { detail::default_budget() = budget; }
inline GroebnerOptions default_groebner_options() { return GroebnerOptions{detail::default_budget()}; }

/// Remainder of f on division by G, reducing every term. Deterministic in
/// the listed order of G.
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  std::vector<Polynomial> local;
  local.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) throw PreconditionError("normal_form: zero polynomial in divisor list");
    local.push_back(g.in_ring(f.ring()));
  }
  return detail::reduce(f, local, nullptr);
}

/// Reduced Groebner basis of the ideal generated by `generators` under the
/// order of `ring`. Normal selection strategy with the coprime and chain criteria.
inline std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators, const RingPtr& ring,
                                              const GroebnerOptions& options = default_groebner_options()) {
  detail::StepCounter counter(options.step_budget);
  const auto& order = ring->order();

  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    Polynomial h = g.in_ring(ring).monic();
    if (h.is_constant()) return {Polynomial::constant(ring, 1)};
    basis.push_back(std::move(h));
  }
  if (basis.empty()) return {};

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto pair_lcm = [&](const Pair& p) {
    return mono_lcm(basis[p.first].leading_monomial(), basis[p.second].leading_monomial());
  };
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm degree, then smallest lcm, then indices.
    auto best = pending.begin();
    Monomial best_lcm = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = pair_lcm(*it);
      const auto dl = l.degree(), db = best_lcm.degree();
      if (dl < db || (dl == db && order.greater(best_lcm, l))) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const Pair p = *best;
    pending.erase(best);
    counter.tick();

    const auto& lf = basis[p.first].leading_monomial();
    const auto& lg = basis[p.second].leading_monomial();
    if (mono_gcd(lf, lg).is_one()) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.first || k == p.second) continue;
      if (basis[k].leading_monomial().divides(best_lcm) && !is_pending(p.first, k) && !is_pending(p.second, k))
        chain = true;
    }
    if (chain) continue;

    Polynomial r = detail::reduce(detail::s_polynomial(basis[p.first], basis[p.second]), basis, &counter);
    if (r.is_zero()) continue;
    r = r.monic();
    if (r.is_constant()) return {Polynomial::constant(ring, 1)};
    const std::size_t n = basis.size();
    basis.push_back(std::move(r));
    for (std::size_t i = 0; i < n; ++i) pending.insert({i, n});
  }
  return detail::interreduce(std::move(basis), &counter);
}

/// An ideal given by generators, with a per-order cache of reduced Groebner bases.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

  Ideal(RingPtr ring, std::vector<Polynomial> generators) : Ideal(std::move(ring)) {
    for (auto& g : generators) {
      if (g.is_zero()) continue;
      Polynomial h = g.in_ring(ring_);
      if (std::find(gens_.begin(), gens_.end(), h) == gens_.end()) gens_.push_back(std::move(h));
    }
  }

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  static Ideal unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {one});
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Reduced Groebner basis under the ring's own order.
  std::vector<Polynomial> groebner_basis(const GroebnerOptions& options = default_groebner_options()) const {
    return groebner_basis(ring_->order(), options);
  }

  /// Reduced Groebner basis under `order`, stored in a ring carrying that order.
  std::vector<Polynomial> groebner_basis(const MonomialOrder& order,
                                         const GroebnerOptions& options = default_groebner_options()) const {
    const bool use_cache = gb_cache_enabled();
    if (use_cache) {
      std::lock_guard lock(cache_->mutex);
      for (const auto& [o, gb] : cache_->entries)
        if (o == order) return gb;
    }
    RingPtr target = order == ring_->order() ? ring_ : ring_->with_order(order);
    auto gb = primdec::groebner_basis(gens_, target, options);
    if (use_cache) {
      std::lock_guard lock(cache_->mutex);
      cache_->entries.emplace_back(order, gb);
    }
    return gb;
  }

  bool is_unit() const {
    const auto gb = groebner_basis();
    return gb.size() == 1 && gb.front().is_constant();
  }

  std::string to_string() const {
    std::string s = "ideal(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ")";
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::vector<Polynomial>>> entries;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline bool is_member(const Polynomial& f, const Ideal& ideal) {
  require_same_variables(f.ring(), ideal.ring());
  const auto gb = ideal.groebner_basis();
  if (gb.empty()) return f.is_zero();
  return normal_form(f.in_ring(ideal.ring()), gb).is_zero();
}

/// I ⊆ J.
inline bool is_subset(const Ideal& inner, const Ideal& outer) {
  require_same_variables(inner.ring(), outer.ring());
  const auto gb = outer.groebner_basis();
  for (const auto& g : inner.generators()) {
    const Polynomial h = g.in_ring(outer.ring());
    if (gb.empty() ? !h.is_zero() : !normal_form(h, gb).is_zero()) return false;
  }
  return true;
}

/// Equality of ideals: reduced Groebner bases agree under the first ring's order.
inline bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_variables(a.ring(), b.ring());
  const auto& order = a.ring()->order();
  const auto ga = a.groebner_basis(order);
  const auto gb = b.groebner_basis(order);
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (ga[i].terms() != gb[i].terms()) return false;
  return true;
}

}  // namespace primdec
