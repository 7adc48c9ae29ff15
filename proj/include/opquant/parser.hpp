#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "opquant/errors.hpp"
#include "opquant/normal_form.hpp"
#include "opquant/quantization.hpp"

namespace opquant {

enum class ParseMode { Operator, Classical };

namespace detail {

// Recursive descent over
//   sum     := ['+'|'-'] product (('+'|'-') product)*
//   product := power (['*'] power | '/' integer)*
//   power   := atom ['^' signed-integer]
//   atom    := q | p | i | hbar | integer | '(' sum ')' | (T|S|B) '[' int ',' int ']'
// Juxtaposition is multiplication and keeps factor order.
class Parser {
 public:
  Parser(std::string_view text, ParseMode mode) : text_(text), mode_(mode) {}

  Expression parse() {
    Expression e = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek_keyword(std::string_view kw) {
    skip_space();
    return text_.substr(pos_, kw.size()) == kw;
  }

  // Accepts ASCII '-' and U+2212.
  bool eat_minus() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int small_integer() {
    const bool negative = eat_minus();
    if (!negative) eat('+');
    const std::size_t start = pos_;
    const mpz_class z = integer();
    if (!z.fits_sint_p()) {
      pos_ = start;
      fail("integer out of range");
    }
    const int v = static_cast<int>(z.get_si());
    return negative ? -v : v;
  }

  bool starts_atom() {
    if (at_end()) return false;
    const char c = text_[pos_];
    return c == 'q' || c == 'p' || c == 'i' || c == 'h' || c == '(' || c == 'T' || c == 'S' || c == 'B' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  Expression sum() {
    Expression out;
    bool negative = eat_minus();
    if (!negative) eat('+');
    for (;;) {
      Expression term = product();
      out += negative ? -term : term;
      if (eat_minus()) negative = true;
      else if (eat('+')) negative = false;
      else break;
    }
    return out;
  }

  Expression product() {
    Expression out = power();
    for (;;) {
      if (eat('*')) {
        out = out * power();
      } else if (eat('/')) {
        const std::size_t start = pos_;
        const mpz_class d = integer();
        if (d == 0) {
          pos_ = start;
          fail("division by zero");
        }
        out *= Scalar(Rational(mpz_class(1), d));
      } else if (starts_atom()) {
        out = out * power();
      } else {
        return out;
      }
    }
  }

  Expression power() {
    bool generator = false;
    Expression base = atom(generator);
    if (!eat('^')) return base;
    const std::size_t exp_pos = pos_;
    const int e = small_integer();
    if (generator) {
      const auto& [w, c] = *base.terms().begin();
      return Expression(Word{{w.factors().front().letter, e}}, c);
    }
    if (e < 0) {
      pos_ = exp_pos;
      fail("negative exponent is only allowed on q or p");
    }
    return opquant::power(base, e);
  }

  Expression atom(bool& generator) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (peek_keyword("hbar")) {
      pos_ += 4;
      return Expression(Scalar::hbar(1));
    }
    const char c = text_[pos_];
    if (c == 'q' || c == 'p') {
      ++pos_;
      generator = true;
      return c == 'q' ? Expression::q() : Expression::p();
    }
    if (c == 'i') {
      ++pos_;
      return Expression(Scalar::i());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expression(Scalar(Rational(integer(), mpz_class(1))));
    if (c == '(') {
      ++pos_;
      Expression inner = sum();
      expect(')');
      return inner;
    }
    if (c == 'T' || c == 'S' || c == 'B') {
      if (mode_ == ParseMode::Classical) fail("basis symbols are not allowed in a classical polynomial");
      ++pos_;
      expect('[');
      const int m = small_integer();
      expect(',');
      const int n = small_integer();
      expect(']');
      const OrderingRule rule = c == 'T' ? OrderingRule::weyl()
                                         : (c == 'S' ? OrderingRule::symmetric() : OrderingRule::born_jordan());
      return basis_operator(rule, {m, n});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  ParseMode mode_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an operator expression; factor order is preserved.
inline Expression parse_expression(std::string_view text) {
  return detail::Parser(text, ParseMode::Operator).parse();
}

/// Parses a polynomial in commuting q and p.
inline ClassicalPolynomial parse_classical(std::string_view text) {
  const Expression e = detail::Parser(text, ParseMode::Classical).parse();
  ClassicalPolynomial out;
  for (const auto& [w, c] : e.terms()) out.add_term({w.total_exponent(Letter::Q), w.total_exponent(Letter::P)}, c);
  return out;
}

}  // namespace opquant
