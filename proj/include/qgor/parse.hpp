#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "qgor/errors.hpp"
#include "qgor/polynomial.hpp"

namespace qgor {

namespace detail {

// Recursive-descent parser over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := ident | number | '(' expr ')'
// where number may be a rational literal a/b. Whitespace insignificant.
template <class F>
class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr<F> ring, std::size_t line = 1, std::size_t col0 = 0)
      : text_(text), ring_(std::move(ring)), line_(line), col0_(col0) {}

  Polynomial<F> parse() {
    skip_ws();
    if (eof()) fail("empty polynomial expression");
    Polynomial<F> p = expr();
    skip_ws();
    if (!eof()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line_, col0_ + pos_ + 1); }

  Polynomial<F> expr() {
    Polynomial<F> acc = Polynomial<F>::zero(ring_);
    bool negate = false;
    skip_ws();
    if (!eof() && (peek() == '+' || peek() == '-')) {
      negate = peek() == '-';
      ++pos_;
    }
    acc = acc + signed_term(negate);
    for (;;) {
      skip_ws();
      if (eof() || (peek() != '+' && peek() != '-')) break;
      bool neg = peek() == '-';
      ++pos_;
      acc = acc + signed_term(neg);
    }
    return acc;
  }

  Polynomial<F> signed_term(bool neg) {
    Polynomial<F> t = term();
    return neg ? -t : t;
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    for (;;) {
      skip_ws();
      if (eof() || peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial<F> factor() {
    Polynomial<F> a = atom();
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      std::uint32_t e = parse_uint();
      a = a.pow(e);
    }
    return a;
  }

  Polynomial<F> atom() {
    skip_ws();
    if (eof()) fail("expected identifier, number, or '('");
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial<F> inner = expr();
      skip_ws();
      if (eof() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial<F> identifier() {
    std::size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    int idx = ring_->var_index(name);
    if (idx < 0) {
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    return Polynomial<F>::variable(ring_, static_cast<std::size_t>(idx));
  }

  Polynomial<F> number() {
    long long num = parse_int_literal();
    skip_ws();
    if (!eof() && peek() == '/') {
      ++pos_;
      skip_ws();
      if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      long long den = parse_int_literal();
      if (den == 0) fail("zero denominator");
      return Polynomial<F>::constant(ring_, ring_->field.make(num, den));
    }
    return Polynomial<F>::constant(ring_, ring_->field.from_int(num));
  }

  long long parse_int_literal() {
    std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 18) {
      pos_ = start;
      fail("integer literal too large");
    }
    return std::stoll(digits);
  }

  std::uint32_t parse_uint() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    long long v = parse_int_literal();
    if (v > (1 << 20)) fail("exponent overflow");
    return static_cast<std::uint32_t>(v);
  }

  std::string_view text_;
  RingPtr<F> ring_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
};

}  // namespace detail

/// Parses `text` into a canonical polynomial of `ring`. Errors carry the
/// 1-based position of the offending character.
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return detail::PolyParser<F>(text, ring).parse();
}

}  // namespace qgor
