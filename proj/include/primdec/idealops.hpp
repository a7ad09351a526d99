#pragma once

// Sum, product, power, intersection, quotient, saturation and elimination of
// polynomial ideals, all decided through reduced Groebner bases.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "primdec/groebner.hpp"

namespace primdec {

struct IdealOpsOptions {
  /// Verify every intersection generator lies in both inputs.
  bool self_check = true;
  /// Cap on quotient iterations inside saturate.
  std::size_t saturation_cap = 4096;
};

inline Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_variables(a.ring(), b.ring());
  auto gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g.in_ring(a.ring()));
  return Ideal(a.ring(), std::move(gens));
}

inline Ideal product(const Ideal& a, const Ideal& b) {
  require_same_variables(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

/// I^n with I^0 = (1).
inline Ideal power(const Ideal& ideal, std::uint32_t n) {
  Ideal result = Ideal::unit(ideal.ring());
  for (std::uint32_t i = 0; i < n; ++i) result = product(result, ideal);
  return result;
}

namespace detail {

inline std::string fresh_variable(const RingContext& ring) {
  if (!ring.index_of("t")) return "t";
  for (std::size_t i = 0;; ++i) {
    std::string name = "t" + std::to_string(i);
    if (!ring.index_of(name)) return name;
  }
}

// Pads exponent vectors with zeros up to the target ring.
inline Polynomial embed(const Polynomial& f, const RingPtr& target) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    auto exps = t.mono.exponents();
    exps.resize(target->nvars(), 0);
    terms.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

// Drops trailing variables, which must not occur in f.
inline Polynomial project(const Polynomial& f, const RingPtr& target) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    auto exps = t.mono.exponents();
    for (std::size_t i = target->nvars(); i < exps.size(); ++i)
      if (exps[i] != 0) throw ConsistencyError("projection of a polynomial that still involves an eliminated variable");
    exps.resize(target->nvars());
    terms.push_back({Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

inline bool free_of(const Polynomial& f, const std::vector<bool>& block) {
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < block.size(); ++i)
      if (block[i] && t.mono[i] != 0) return false;
  return true;
}

}  // namespace detail

/// I ∩ k[remaining variables]: the elements of a Groebner basis under an
/// elimination order that avoid `vars`. The result stays in I's ring.
inline Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> vars) {
  if (vars.empty()) return ideal;
  const RingPtr& ring = ideal.ring();
  std::vector<bool> block(ring->nvars(), false);
  for (auto v : vars) {
    if (v >= ring->nvars()) throw DimensionMismatch("eliminated variable index out of range");
    block[v] = true;
  }
  const auto gb = ideal.groebner_basis(MonomialOrder::elimination(block));
  std::vector<Polynomial> kept;
  for (const auto& g : gb)
    if (detail::free_of(g, block)) kept.push_back(g.in_ring(ring));
  return Ideal(ring, std::move(kept));
}

inline Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& names) {
  std::vector<std::size_t> vars;
  for (const auto& n : names) {
    auto idx = ideal.ring()->index_of(n);
    if (!idx) throw PreconditionError("unknown variable '" + n + "'");
    vars.push_back(*idx);
  }
  return eliminate(ideal, vars);
}

/// I ∩ J by eliminating a fresh variable t from t·I + (1 - t)·J.
inline Ideal intersect(const Ideal& a, const Ideal& b0, const IdealOpsOptions& options = {}) {
  require_same_variables(a.ring(), b0.ring());
  const Ideal b(a.ring(), b0.generators());
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;

  auto vars = ring->variables();
  vars.push_back(detail::fresh_variable(*ring));
  std::vector<bool> block(vars.size(), false);
  block.back() = true;
  const RingPtr ext = RingContext::make(vars, MonomialOrder::elimination(block), ring->exponent_cap());

  const Polynomial t = Polynomial::variable(ext, ext->nvars() - 1);
  const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * detail::embed(f, ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * detail::embed(g, ext));

  std::vector<Polynomial> kept;
  for (const auto& g : groebner_basis(gens, ext))
    if (detail::free_of(g, block)) kept.push_back(detail::project(g, ring));
  Ideal result(ring, std::move(kept));

  if (options.self_check) {
    for (const auto& g : result.generators())
      if (!is_member(g, a) || !is_member(g, b))
        throw ConsistencyError("intersection generator " + g.to_string() + " is not in both inputs");
  }
  return result;
}

/// (I : g) = (I ∩ (g)) / g.
inline Ideal quotient(const Ideal& ideal, const Polynomial& g, const IdealOpsOptions& options = {}) {
  if (g.is_zero()) throw PreconditionError("quotient by the zero polynomial");
  require_same_variables(ideal.ring(), g.ring());
  const RingPtr& ring = ideal.ring();
  if (is_member(g, ideal)) return Ideal::unit(ring);
  const Ideal meet = intersect(ideal, Ideal(ring, {g}), options);
  std::vector<Polynomial> gens;
  for (const auto& h : meet.generators()) gens.push_back(exact_divide(h, g.in_ring(ring)));
  return Ideal(ring, std::move(gens));
}

/// (I : J) = ∩ over generators g of J of (I : g).
inline Ideal quotient(const Ideal& ideal, const Ideal& by, const IdealOpsOptions& options = {}) {
  require_same_variables(ideal.ring(), by.ring());
  if (by.is_zero()) throw PreconditionError("quotient by the zero ideal");
  Ideal result = Ideal::unit(ideal.ring());
  for (const auto& g : by.generators()) result = intersect(result, quotient(ideal, g, options), options);
  return result;
}

struct Saturation {
  Ideal ideal;
  /// Least i with (I : J^i) = (I : J^{i+1}).
  std::size_t exponent;
};

/// (I : J^∞) by iterating K ↦ (K : J) until it stabilizes.
inline Saturation saturate(const Ideal& ideal, const Ideal& by, const IdealOpsOptions& options = {}) {
  require_same_variables(ideal.ring(), by.ring());
  if (by.is_zero()) throw PreconditionError("saturation by the zero ideal");
  Ideal current = ideal;
  for (std::size_t i = 0; i <= options.saturation_cap; ++i) {
    Ideal next = quotient(current, by, options);
    if (ideal_equal(next, current)) return {std::move(next), i};
    current = std::move(next);
  }
  throw BudgetExceeded("saturation did not stabilize within " + std::to_string(options.saturation_cap) + " steps");
}

}  // namespace primdec
