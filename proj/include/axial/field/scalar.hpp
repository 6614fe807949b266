#pragma once

#include <string>
#include <utility>

#include "axial/error.hpp"
#include "axial/field/poly.hpp"

namespace axial {

/// Element of Q(a, b, x, ...) kept as a reduced fraction with a monic
/// denominator, so equal values have identical representations.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}              // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : num_(c), den_(1) {}   // NOLINT(google-explicit-constructor)
  Scalar(Poly p) : num_(std::move(p)), den_(1) {}   // NOLINT(google-explicit-constructor)

  static Scalar param(std::string_view name) { return Scalar(Poly::param(name)); }
  static Scalar zero() { return {}; }
  static Scalar one() { return Scalar(1); }
  static Scalar rational(long p, long q) { return Scalar(Rational(p, q) / 1); }

  /// Canonical reduced form of num / den.
  static Scalar fraction(Poly num, Poly den) {
    if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "denominator is the zero polynomial");
    Scalar s;
    if (num.is_zero()) return s;
    if (den.is_constant()) {
      s.num_ = num.scaled(1 / den.leading_coeff());
      return s;
    }
    const Poly g = gcd(num, den);
    if (!g.is_constant()) {
      num = *exact_divide(num, g);
      den = *exact_divide(den, g);
    }
    const Rational lc = den.leading_coeff();
    s.num_ = num.scaled(1 / lc);
    s.den_ = den.scaled(1 / lc);
    return s;
  }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value(); }

  Scalar operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b, false); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return add(a, b, true); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return Scalar(a.num_ * b.num_);
    // Cross-cancel first so the product needs no further reduction.
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    Poly num = *exact_divide(a.num_, g1) * *exact_divide(b.num_, g2);
    Poly den = *exact_divide(a.den_, g2) * *exact_divide(b.den_, g1);
    return normalized(std::move(num), std::move(den));
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return normalized(den_, num_);
  }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Value at a rational point.
  Rational eval(const ParamAssignment& at) const {
    const Rational d = den_.eval(at);
    if (d == 0) throw Error(ErrorKind::DenominatorVanishes, "denominator " + den_.to_string() + " vanishes");
    return num_.eval(at) / d;
  }

  /// Substitutes the listed parameters, leaving the rest symbolic.
  Scalar specialize(const ParamAssignment& at) const {
    Poly d = den_.specialize(at);
    if (d.is_zero()) throw Error(ErrorKind::DenominatorVanishes, "denominator " + den_.to_string() + " vanishes");
    return fraction(num_.specialize(at), std::move(d));
  }

  Scalar permuted(const ParamPermutation& perm) const {
    return fraction(num_.permuted(perm), den_.permuted(perm));
  }

  std::uint32_t support() const { return num_.support() | den_.support(); }

  /// Degree used for pivot selection.
  unsigned degree() const { return num_.total_degree() + den_.total_degree(); }

  std::string to_string() const {
    if (den_.is_constant()) return num_.to_string();
    const auto n = num_.to_string();
    const auto d = den_.to_string();
    const bool bare_num = num_.terms().size() == 1;
    const bool bare_den = den_.terms().size() == 1 && d.find('*') == std::string::npos;
    return (bare_num ? n : "(" + n + ")") + "/" + (bare_den ? d : "(" + d + ")");
  }

 private:
  // Fraction whose numerator and denominator are already coprime.
  static Scalar normalized(Poly num, Poly den) {
    if (den.is_constant()) return Scalar(num.scaled(1 / den.leading_coeff()));
    const Rational lc = den.leading_coeff();
    Scalar s;
    s.num_ = num.scaled(1 / lc);
    s.den_ = den.scaled(1 / lc);
    return s;
  }

  static Scalar add(const Scalar& a, const Scalar& b, bool subtract) {
    if (a.is_polynomial() && b.is_polynomial()) {
      return Scalar(subtract ? a.num_ - b.num_ : a.num_ + b.num_);
    }
    if (a.den_ == b.den_) return fraction(subtract ? a.num_ - b.num_ : a.num_ + b.num_, a.den_);
    const Poly g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
      Poly num = subtract ? a.num_ * b.den_ - b.num_ * a.den_ : a.num_ * b.den_ + b.num_ * a.den_;
      if (num.is_zero()) return {};
      return normalized(std::move(num), a.den_ * b.den_);
    }
    const Poly ca = *exact_divide(b.den_, g);
    const Poly cb = *exact_divide(a.den_, g);
    Poly num = subtract ? a.num_ * ca - b.num_ * cb : a.num_ * ca + b.num_ * cb;
    return fraction(std::move(num), a.den_ * ca);
  }

  Poly num_;
  Poly den_;
};

/// Monic numerator: the polynomial whose vanishing makes `s` zero.
inline Poly certificate_poly(const Scalar& s) { return monic(s.numerator()); }

inline std::string to_string(const Scalar& s) { return s.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace axial
