#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bzeta/symfield/ratfunc.hpp"

namespace bzeta {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t p)
      : std::runtime_error(what + " at offset " + std::to_string(p)), pos(p) {}
};

namespace detail {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := '-' unary | '+' unary | power
// power  := atom ('^' ['-'|'+'] int)?
// atom   := int | ident | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[i_]) + "'", i_);
    return r;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r = term();
    while (true) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        const std::size_t at = i_;
        RatFunc d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }
  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  RatFunc power() {
    RatFunc base = atom();
    if (!eat('^')) return base;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    skip();
    const std::size_t at = i_;
    long k = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      k = k * 10 + (s_[i_++] - '0');
      if (k > 100000) throw ParseError("exponent too large", at);
    }
    if (i_ == at) throw ParseError("expected integer exponent", at);
    if (neg && base.is_zero()) throw ParseError("zero to a negative power", at);
    return base.pow(neg ? -static_cast<int>(k) : static_cast<int>(k));
  }
  RatFunc atom() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      RatFunc r = expr();
      if (!eat(')')) throw ParseError("expected ')'", i_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t b = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return RatFunc(mpz_class(std::string(s_.substr(b, i_ - b))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t b = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      return RatFunc(Var(s_.substr(b, i_ - b)));
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", i_);
  }
};

}  // namespace detail

/// Parses an infix expression over registry variables, e.g. "(1-A*T/Q)^-1".
/// Unknown identifiers are interned as new variables.
inline RatFunc parse(std::string_view text) { return detail::Parser(text).run(); }

}  // namespace bzeta
