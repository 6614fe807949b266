#pragma once

#include <string>

#include "axial/field/scalar.hpp"

namespace axial {

/// Element re + im*omega of Q(a, b, ...)(omega) with omega^2 + omega + 1 = 0.
class OmegaScalar {
 public:
  OmegaScalar() = default;
  explicit OmegaScalar(Scalar re, Scalar im = {}) : re_(std::move(re)), im_(std::move(im)) {}
  explicit OmegaScalar(long c) : re_(c) {}

  static OmegaScalar zero() { return {}; }
  static OmegaScalar one() { return OmegaScalar(1); }
  static OmegaScalar omega() { return OmegaScalar(Scalar(0), Scalar(1)); }

  const Scalar& re() const { return re_; }
  const Scalar& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_constant() const { return re_.is_constant() && im_.is_constant(); }

  /// Image under omega -> omega^2 = -1 - omega.
  OmegaScalar conjugate() const { return OmegaScalar(re_ - im_, -im_); }

  /// (re + im*omega)(re + im*omega^2); lies in the base field.
  Scalar norm() const { return re_ * re_ - re_ * im_ + im_ * im_; }

  OmegaScalar operator-() const { return OmegaScalar(-re_, -im_); }

  friend OmegaScalar operator+(const OmegaScalar& a, const OmegaScalar& b) {
    return OmegaScalar(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend OmegaScalar operator-(const OmegaScalar& a, const OmegaScalar& b) {
    return OmegaScalar(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend OmegaScalar operator*(const OmegaScalar& a, const OmegaScalar& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return OmegaScalar(a.re_ * b.re_);
    const Scalar bd = a.im_ * b.im_;
    return OmegaScalar(a.re_ * b.re_ - bd, a.re_ * b.im_ + a.im_ * b.re_ - bd);
  }
  friend OmegaScalar operator/(const OmegaScalar& a, const OmegaScalar& b) { return a * b.inverse(); }

  OmegaScalar inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (im_.is_zero()) return OmegaScalar(re_.inverse());
    const Scalar n = norm().inverse();
    const OmegaScalar c = conjugate();
    return OmegaScalar(c.re_ * n, c.im_ * n);
  }

  OmegaScalar& operator+=(const OmegaScalar& b) { return *this = *this + b; }
  OmegaScalar& operator-=(const OmegaScalar& b) { return *this = *this - b; }
  OmegaScalar& operator*=(const OmegaScalar& b) { return *this = *this * b; }
  OmegaScalar& operator/=(const OmegaScalar& b) { return *this = *this / b; }

  friend bool operator==(const OmegaScalar& a, const OmegaScalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const OmegaScalar& a, const OmegaScalar& b) { return !(a == b); }

  Rational eval(const ParamAssignment& at) const {
    if (!im_.is_zero()) throw Error(ErrorKind::OmegaUnevaluable, "value " + to_string() + " involves omega");
    return re_.eval(at);
  }

  OmegaScalar specialize(const ParamAssignment& at) const {
    return OmegaScalar(re_.specialize(at), im_.specialize(at));
  }

  OmegaScalar permuted(const ParamPermutation& perm) const {
    return OmegaScalar(re_.permuted(perm), im_.permuted(perm));
  }

  unsigned degree() const { return re_.degree() + im_.degree(); }

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    const std::string w = im_ == Scalar(1) ? std::string(kOmegaName) : "(" + im_.to_string() + ")*" + std::string(kOmegaName);
    if (re_.is_zero()) return w;
    return "(" + re_.to_string() + ") + " + w;
  }

 private:
  Scalar re_;
  Scalar im_;
};

/// The norm is omega-free and vanishes exactly where the value does.
inline Poly certificate_poly(const OmegaScalar& s) { return monic(s.norm().numerator()); }

inline std::string to_string(const OmegaScalar& s) { return s.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const OmegaScalar& s) { return os << s.to_string(); }

}  // namespace axial
