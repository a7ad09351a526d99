#pragma once

// Input language:
//
//   input  := [ "ring" ident { "," ident } [";"] ] "ideal" "(" [ expr { "," expr } ] ")"
//   expr   := term { ("+" | "-") term }
//   term   := unary { ("*" | "/") unary }        division only by nonzero constants
//   unary  := ("+" | "-") unary | power
//   power  := atom [ "^" unsigned-integer ]
//   atom   := integer | ident | "(" expr ")"
//
// Without a ring declaration the variables are inferred in order of first appearance.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primdec/groebner.hpp"

namespace primdec {

namespace detail {

struct Token {
  enum Kind { ident, number, symbol, end } kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::ident, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::number, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
    } else if (std::string_view("+-*/^(),;").find(c) != std::string_view::npos) {
      out.push_back({Token::symbol, std::string(1, c), l, cc});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
    }
  }
  out.push_back({Token::end, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, RingPtr ring) : toks_(std::move(tokens)), ring_(std::move(ring)) {}

  Ideal parse_ideal_literal() {
    expect_ident("ideal");
    expect("(");
    std::vector<Polynomial> gens;
    if (!peek_is(")")) {
      gens.push_back(expr());
      while (accept(",")) gens.push_back(expr());
    }
    expect(")");
    if (peek().kind != Token::end) fail("unexpected trailing input '" + peek().text + "'");
    return Ideal(ring_, std::move(gens));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool peek_is(const char* sym) const { return peek().kind == Token::symbol && peek().text == sym; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().line, peek().column); }

  bool accept(const char* sym) {
    if (!peek_is(sym)) return false;
    ++pos_;
    return true;
  }

  void expect(const char* sym) {
    if (!accept(sym)) fail(std::string("expected '") + sym + "'" + (peek().kind == Token::end ? " before end of input" : ", found '" + peek().text + "'"));
  }

  void expect_ident(const char* word) {
    if (peek().kind != Token::ident || peek().text != word) fail(std::string("expected '") + word + "'");
    ++pos_;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept("+"))
        acc = acc + term();
      else if (accept("-"))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (accept("*")) {
        acc = acc * unary();
      } else if (peek_is("/")) {
        const Token at = peek();
        ++pos_;
        const Polynomial d = unary();
        if (!d.is_constant() || d.is_zero())
          throw ParseError("division is only allowed by nonzero constants", at.line, at.column);
        acc = acc.scaled(1 / d.leading_coeff());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!peek_is("^")) return base;
    ++pos_;
    if (peek().kind != Token::number) fail("malformed exponent: expected a nonnegative integer");
    const Token tok = peek();
    ++pos_;
    mpz_class e(tok.text);
    if (e > ring_->exponent_cap()) throw ParseError("exponent " + tok.text + " exceeds the exponent cap", tok.line, tok.column);
    Polynomial result = Polynomial::constant(ring_, 1);
    for (unsigned long k = e.get_ui(); k > 0; k >>= 1) {
      if (k & 1) result = result * base;
      if (k > 1) base = base * base;
    }
    return result;
  }

  Polynomial atom() {
    const Token tok = peek();
    if (tok.kind == Token::number) {
      ++pos_;
      return Polynomial::constant(ring_, Coeff(mpz_class(tok.text)));
    }
    if (tok.kind == Token::ident) {
      if (tok.text == "ideal" || tok.text == "ring") fail("unexpected keyword '" + tok.text + "'");
      auto idx = ring_->index_of(tok.text);
      if (!idx) fail("unknown variable '" + tok.text + "'");
      ++pos_;
      return Polynomial::variable(ring_, *idx);
    }
    if (accept("(")) {
      Polynomial inner = expr();
      expect(")");
      return inner;
    }
    fail(tok.kind == Token::end ? std::string("unexpected end of input") : "unexpected '" + tok.text + "'");
  }

  std::vector<Token> toks_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

// Splits off a leading ring declaration; returns its variable names if present.
inline std::optional<std::vector<std::string>> take_ring_declaration(std::vector<Token>& toks) {
  if (toks.empty() || toks[0].kind != Token::ident || toks[0].text != "ring") return std::nullopt;
  std::vector<std::string> vars;
  std::size_t i = 1;
  while (true) {
    if (toks[i].kind != Token::ident) throw ParseError("expected a variable name in ring declaration", toks[i].line, toks[i].column);
    if (toks[i].text == "ideal" || toks[i].text == "ring")
      throw ParseError("keyword '" + toks[i].text + "' cannot be a variable", toks[i].line, toks[i].column);
    vars.push_back(toks[i].text);
    ++i;
    if (toks[i].kind == Token::symbol && toks[i].text == ",") {
      ++i;
      continue;
    }
    break;
  }
  if (toks[i].kind == Token::symbol && toks[i].text == ";") ++i;
  toks.erase(toks.begin(), toks.begin() + static_cast<std::ptrdiff_t>(i));
  return vars;
}

inline void collect_identifiers(const std::vector<Token>& toks, std::vector<std::string>& vars) {
  for (const auto& t : toks)
    if (t.kind == Token::ident && t.text != "ideal" && t.text != "ring" &&
        std::find(vars.begin(), vars.end(), t.text) == vars.end())
      vars.push_back(t.text);
}

}  // namespace detail

/// Parses "ring x,y; ideal(...)" or a bare "ideal(...)" into `ring` when given.
inline Ideal parse_ideal(std::string_view text, RingPtr ring = nullptr) {
  auto toks = detail::tokenize(text);
  auto declared = detail::take_ring_declaration(toks);
  if (declared) {
    RingPtr own = RingContext::make(*declared, ring ? ring->order() : MonomialOrder::grevlex());
    if (ring && !ring->same_variables(*own))
      throw ParseError("ring declaration conflicts with the surrounding ring", 1, 1);
    ring = ring ? ring : own;
  }
  if (!ring) {
    std::vector<std::string> vars;
    detail::collect_identifiers(toks, vars);
    ring = RingContext::make(std::move(vars));
  }
  return detail::Parser(std::move(toks), ring).parse_ideal_literal();
}

/// Parses several ideals into one shared ring: the first ring declaration
/// found wins, otherwise variables are inferred across all inputs in order.
inline std::vector<Ideal> parse_ideals(const std::vector<std::string>& texts, RingPtr ring = nullptr,
                                       MonomialOrder order = MonomialOrder::grevlex()) {
  if (!ring) {
    std::vector<std::string> vars;
    std::optional<std::vector<std::string>> declared;
    for (const auto& text : texts) {
      auto toks = detail::tokenize(text);
      auto d = detail::take_ring_declaration(toks);
      if (d && !declared) declared = d;
      detail::collect_identifiers(toks, vars);
    }
    if (declared) vars = *declared;
    ring = RingContext::make(std::move(vars), std::move(order));
  }
  std::vector<Ideal> out;
  for (const auto& text : texts) out.push_back(parse_ideal(text, ring));
  return out;
}

/// Parses a comma-separated variable list such as "x,y,z".
inline RingPtr parse_ring(std::string_view text, MonomialOrder order = MonomialOrder::grevlex()) {
  auto toks = detail::tokenize("ring " + std::string(text));
  auto vars = detail::take_ring_declaration(toks);
  if (toks.empty() || toks.front().kind != detail::Token::end)
    throw ParseError("unexpected input after variable list", toks.front().line, toks.front().column);
  return RingContext::make(std::move(*vars), std::move(order));
}

}  // namespace primdec
