#pragma once

// Polynomial text grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | VARIABLE | '(' expr ')'
//
// '^' binds tightest, then '*', then '+'/'-'. Implicit multiplication is a
// syntax error.

#include <cctype>
#include <string>
#include <string_view>

#include "samuel/polynomial.hpp"

namespace samuel {

namespace detail {

template <CoefficientField F>
class PolyParser {
 public:
  PolyParser(RingPtr<F> ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  Polynomial<F> parse() {
    skip_space();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty polynomial");
    Polynomial<F> p = expr();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  Polynomial<F> expr() {
    Polynomial<F> acc = term();
    for (;;) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> term() {
    Polynomial<F> acc = unary();
    for (;;) {
      skip_space();
      if (!peek('*')) return acc;
      ++pos_;
      acc *= unary();
    }
  }

  Polynomial<F> unary() {
    skip_space();
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Polynomial<F> power() {
    Polynomial<F> base = primary();
    skip_space();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    const std::size_t at = pos_;
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw SyntaxError(at, "exponent must be a nonnegative integer literal");
    }
    const std::string digits = integer_literal();
    if (digits.size() > 4) throw SyntaxError(at, "exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  Polynomial<F> primary() {
    skip_space();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<F> inner = expr();
      skip_space();
      if (!peek(')')) throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string digits = integer_literal();
      const mpq_class q{mpz_class(digits)};
      return Polynomial<F>::constant(ring_, ring_->field().from_rational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_++];
      }
      auto idx = ring_->index_of(name);
      if (!idx) fail(ErrorCode::UnknownVariable, "'" + name + "' at position " + std::to_string(at));
      return Polynomial<F>::variable(ring_, *idx);
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string integer_literal() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) digits += text_[pos_++];
    return digits;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  RingPtr<F> ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <CoefficientField F>
Polynomial<F> parse_poly(const RingPtr<F>& ring, std::string_view text) {
  return detail::PolyParser<F>(ring, text).parse();
}

template <CoefficientField F>
std::vector<Polynomial<F>> parse_polys(const RingPtr<F>& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial<F>> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_poly(ring, t));
  return out;
}

}  // namespace samuel
