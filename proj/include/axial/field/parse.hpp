#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "axial/field/omega.hpp"
#include "axial/field/scalar.hpp"

namespace axial {

namespace detail {

// Recursive-descent parser for sums, products, quotients and integer
// powers of rationals, parameter names and (optionally) omega.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' integer]
//   atom   := integer | name | '(' expr ')'
template <class F>
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  F parse() {
    F v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  F expr() {
    F v = F(0);
    bool first = true;
    while (true) {
      bool negate = false;
      if (accept('-')) {
        negate = true;
      } else if (!accept('+') && !first) {
        break;
      }
      F t = term();
      v = negate ? v - t : v + t;
      first = false;
    }
    return v;
  }

  F term() {
    F v = factor();
    while (true) {
      if (accept('*')) {
        v = v * factor();
      } else if (accept('/')) {
        F d = factor();
        if (d.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero in '" + std::string(text_) + "'");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  F factor() {
    F base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e > 255) fail("exponent too large");
    F r = F(1);
    for (unsigned long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  F atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      F v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return F(Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == kOmegaName) {
        if constexpr (std::is_same_v<F, OmegaScalar>) {
          return OmegaScalar::omega();
        } else {
          throw Error(ErrorKind::ParseError, "omega is not available over the plain field");
        }
      }
      return F(Scalar::param(name));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar parse_scalar(std::string_view text) { return detail::Parser<Scalar>(text).parse(); }

inline OmegaScalar parse_omega_scalar(std::string_view text) {
  return detail::Parser<OmegaScalar>(text).parse();
}

inline Poly parse_poly(std::string_view text) {
  const Scalar s = parse_scalar(text);
  if (!s.is_polynomial()) throw Error(ErrorKind::ParseError, "not a polynomial: '" + std::string(text) + "'");
  return s.numerator().scaled(1 / s.denominator().leading_coeff());
}

}  // namespace axial
