#pragma once

// Seeded generators for random rings, monomials, polynomials and monomial ideals.

#include <random>
#include <string>
#include <vector>

#include "primdec/monomial.hpp"

namespace primdec::testing {

inline RingPtr ring_with(std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex()) {
  static const std::vector<std::string> names{"x", "y", "z", "w", "v"};
  return RingContext::make({names.begin(), names.begin() + static_cast<std::ptrdiff_t>(nvars)}, std::move(order));
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// A monomial of total degree in [min_degree, max_degree].
inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, std::uint32_t min_degree,
                                std::uint32_t max_degree) {
  Monomial m(nvars);
  const auto d = static_cast<std::uint32_t>(uniform(rng, min_degree, max_degree));
  for (std::uint32_t k = 0; k < d; ++k) ++m[uniform(rng, 0, nvars - 1)];
  return m;
}

struct MonomialIdealShape {
  std::size_t min_vars = 2;
  std::size_t max_vars = 4;
  std::size_t max_generators = 4;
  std::uint32_t max_degree = 6;
};

/// A proper nonzero monomial ideal: every generator has degree >= 1.
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, const MonomialIdealShape& shape = {}) {
  const auto ring = ring_with(uniform(rng, shape.min_vars, shape.max_vars));
  std::vector<Monomial> gens;
  const auto count = uniform(rng, 1, shape.max_generators);
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_monomial(rng, ring->nvars(), 1, shape.max_degree));
  return MonomialIdeal(ring, std::move(gens));
}

inline MonomialIdeal random_monomial_ideal_in(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_generators,
                                              std::uint32_t max_degree) {
  std::vector<Monomial> gens;
  const auto count = uniform(rng, 1, max_generators);
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_monomial(rng, ring->nvars(), 1, max_degree));
  return MonomialIdeal(ring, std::move(gens));
}

/// Small integer or half-integer coefficients, at most `terms` terms.
inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, std::size_t terms,
                                    std::uint32_t max_degree) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < terms; ++i) {
    Coeff c(static_cast<long>(uniform(rng, 0, 10)) - 5, static_cast<long>(uniform(rng, 1, 2)));
    c.canonicalize();
    ts.push_back({random_monomial(rng, ring->nvars(), 0, max_degree), c});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

}  // namespace primdec::testing
