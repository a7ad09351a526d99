#pragma once

// Exact sparse multivariate polynomials over the rationals.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "primdec/errors.hpp"

namespace primdec {

using Coeff = mpq_class;
using Exponent = std::uint32_t;

inline constexpr Exponent kDefaultExponentCap = std::numeric_limits<std::int32_t>::max();

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  /// Number of variables with a nonzero exponent.
  std::size_t support_size() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e != 0; }));
  }

  bool divides(const Monomial& other) const {
    check_dims(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  void check_dims(const Monomial& other) const {
    if (exps_.size() != other.exps_.size())
      throw DimensionMismatch("monomials have " + std::to_string(exps_.size()) + " and " +
                              std::to_string(other.exps_.size()) + " variables");
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Plain vector order; only for containers. Ring orders live in MonomialOrder.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < m.size(); ++i) h = (h ^ m[i]) * 1099511628211ull;
    return h;
  }
};

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  a.check_dims(b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  a.check_dims(b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b, Exponent cap = kDefaultExponentCap) {
  a.check_dims(b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t e = std::uint64_t{a[i]} + b[i];
    if (e > cap) throw ExponentOverflow("exponent " + std::to_string(e) + " exceeds cap " + std::to_string(cap));
    r[i] = static_cast<Exponent>(e);
  }
  return r;
}

/// a / b; requires b | a.
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw PreconditionError("monomial division is not exact");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

/// a / gcd(a, b), i.e. exponents max(a_i - b_i, 0).
inline Monomial mono_colon(const Monomial& a, const Monomial& b) {
  a.check_dims(b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return r;
}

enum class OrderKind { lex, grevlex, elimination };

/// A monomial order. `elimination` ranks first by total degree in a block of
/// variables and breaks ties with grevlex; it eliminates that block.
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex, {}); }
  static MonomialOrder elimination(std::vector<bool> block) {
    return MonomialOrder(OrderKind::elimination, std::move(block));
  }

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<bool>& block() const noexcept { return block_; }

  std::string name() const {
    switch (kind_) {
      case OrderKind::lex: return "lex";
      case OrderKind::grevlex: return "grevlex";
      case OrderKind::elimination: return "elimination";
    }
    return "?";
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      case OrderKind::grevlex:
        return compare_grevlex(a, b);
      case OrderKind::elimination: {
        std::uint64_t wa = 0, wb = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
          if (block_[i]) {
            wa += a[i];
            wb += b[i];
          }
        if (wa != wb) return wa <=> wb;
        return compare_grevlex(a, b);
      }
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<bool> block) : kind_(kind), block_(std::move(block)) {}

  static std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }

  OrderKind kind_;
  std::vector<bool> block_;
};

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// Variable names, a monomial order and an exponent cap.
class RingContext {
 public:
  static RingPtr make(std::vector<std::string> variables,
                      MonomialOrder order = MonomialOrder::grevlex(),
                      Exponent exponent_cap = kDefaultExponentCap) {
    std::unordered_set<std::string> seen;
    for (const auto& v : variables) {
      if (v.empty()) throw PreconditionError("empty variable name");
      if (!seen.insert(v).second) throw PreconditionError("duplicate variable name '" + v + "'");
    }
    if (order.kind() == OrderKind::elimination && order.block().size() != variables.size())
      throw DimensionMismatch("elimination block does not match the number of variables");
    return RingPtr(new RingContext(std::move(variables), std::move(order), exponent_cap));
  }

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }
  Exponent exponent_cap() const noexcept { return cap_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  RingPtr with_order(MonomialOrder order) const { return make(vars_, std::move(order), cap_); }

  bool same_variables(const RingContext& other) const { return vars_ == other.vars_; }

  std::string to_string() const {
    std::string s = "ring ";
    for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
    return s;
  }

 private:
  RingContext(std::vector<std::string> vars, MonomialOrder order, Exponent cap)
      : vars_(std::move(vars)), order_(std::move(order)), cap_(cap) {}

  std::vector<std::string> vars_;
  MonomialOrder order_;
  Exponent cap_;
};

inline void require_same_variables(const RingPtr& a, const RingPtr& b) {
  if (a != b && !a->same_variables(*b))
    throw DimensionMismatch("operands live in different rings (" + a->to_string() + " vs " + b->to_string() + ")");
}

inline std::string monomial_to_string(const Monomial& m, const RingContext& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variables()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

/// Immutable-by-convention polynomial; terms are kept sorted in decreasing
/// ring order with no zero coefficients and no repeated monomials.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Coeff& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({Monomial(ring->nvars()), c});
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    Monomial m(ring->nvars());
    m[index] = 1;
    return monomial(std::move(ring), std::move(m));
  }

  static Polynomial monomial(RingPtr ring, Monomial m, const Coeff& c = 1) {
    if (m.size() != ring->nvars()) throw DimensionMismatch("monomial length does not match ring");
    Polynomial p(std::move(ring));
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
  }

  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const auto& order = p.ring_->order();
    for (const auto& t : terms)
      if (t.mono.size() != p.ring_->nvars()) throw DimensionMismatch("term length does not match ring");
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  const Term& leading_term() const {
    if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Same polynomial stored under another ring with the same variables.
  Polynomial in_ring(const RingPtr& target) const {
    if (target == ring_) return *this;
    require_same_variables(ring_, target);
    if (target->order() == ring_->order()) {
      Polynomial p(target);
      p.terms_ = terms_;
      return p;
    }
    return from_terms(target, terms_);
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    if (leading_coeff() == 1) return *this;
    return scaled(1 / leading_coeff());
  }

  Polynomial scaled(const Coeff& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
    return p;
  }

  /// c * m * this. Multiplication by a monomial preserves the term order.
  Polynomial times_term(const Monomial& m, const Coeff& c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({mono_mul(t.mono, m, ring_->exponent_cap()), t.coeff * c});
    return p;
  }

  Polynomial operator-() const { return scaled(-1); }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) { return combine(f, g, 1); }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return combine(f, g, -1); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g0) {
    const Polynomial g = g0.in_ring(f.ring_);
    std::vector<Term> prod;
    prod.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_)
        prod.push_back({mono_mul(a.mono, b.mono, f.ring_->exponent_cap()), a.coeff * b.coeff});
    return from_terms(f.ring_, std::move(prod));
  }

  /// Polynomial equality (same variables and same terms).
  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (f.ring_ != g.ring_ && !f.ring_->same_variables(*g.ring_)) return false;
    if (f.size() != g.size()) return false;
    if (f.ring_->order() == g.ring_->order()) return f.terms_ == g.terms_;
    return f.terms_ == g.in_ring(f.ring_).terms_;
  }

  /// Canonical text, e.g. "3/2*x^2*y - 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      const bool negative = sgn(t.coeff) < 0;
      if (i == 0) {
        if (negative) s += '-';
      } else {
        s += negative ? " - " : " + ";
      }
      const Coeff mag = abs(t.coeff);
      const bool unit_coeff = (mag == 1);
      if (t.mono.is_one()) {
        s += mag.get_str();
      } else {
        if (!unit_coeff) s += mag.get_str() + "*";
        s += monomial_to_string(t.mono, *ring_);
      }
    }
    return s;
  }

 private:
  static Polynomial combine(const Polynomial& f, const Polynomial& g0, int sign) {
    const Polynomial g = g0.in_ring(f.ring_);
    const auto& order = f.ring_->order();
    Polynomial r(f.ring_);
    r.terms_.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        r.terms_.push_back(f.terms_[i++]);
        continue;
      }
      if (i == f.size()) {
        r.terms_.push_back({g.terms_[j].mono, sign * g.terms_[j].coeff});
        ++j;
        continue;
      }
      const auto c = order.compare(f.terms_[i].mono, g.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(f.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back({g.terms_[j].mono, sign * g.terms_[j].coeff});
        ++j;
      } else {
        Coeff sum = f.terms_[i].coeff + sign * g.terms_[j].coeff;
        if (sum != 0) r.terms_.push_back({f.terms_[i].mono, std::move(sum)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

/// Leading term of f under an arbitrary order (f may be stored under another one).
inline Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw PreconditionError("leading term of the zero polynomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.greater(t.mono, best->mono)) best = &t;
  return *best;
}

/// Exact quotient f / g; throws ConsistencyError when g does not divide f.
inline Polynomial exact_divide(const Polynomial& f, const Polynomial& g0) {
  if (g0.is_zero()) throw PreconditionError("division by the zero polynomial");
  const Polynomial g = g0.in_ring(f.ring());
  Polynomial rest = f;
  std::vector<Term> quotient;
  const auto& lg = g.leading_term();
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!lg.mono.divides(lt.mono)) throw ConsistencyError("polynomial division is not exact");
    Term q{mono_div(lt.mono, lg.mono), lt.coeff / lg.coeff};
    rest = rest - g.times_term(q.mono, q.coeff);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

}  // namespace primdec
