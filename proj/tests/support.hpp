#pragma once

#include <random>
#include <vector>

#include "axial/field.hpp"

namespace axial::testing {

inline Scalar A() { return Scalar::param("a"); }
inline Scalar B() { return Scalar::param("b"); }
inline Scalar X() { return Scalar::param("x"); }
inline Scalar Y() { return Scalar::param("y"); }
inline Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }
inline Scalar S(std::string_view text) { return parse_scalar(text); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational rational(long bound = 9) {
    const long d = integer(1, bound);
    Rational r(integer(-bound, bound), d);
    r.canonicalize();
    return r;
  }

  /// Polynomial in a, b, x with at most `terms` terms of degree <= `deg`.
  Poly poly(int terms = 3, unsigned deg = 2) {
    Poly p;
    const char* names[] = {"a", "b", "x"};
    for (int t = 0; t < terms; ++t) {
      Poly m(rational(5));
      for (auto* n : names) {
        const auto e = static_cast<unsigned>(integer(0, deg));
        for (unsigned k = 0; k < e; ++k) m = m * Poly::param(n);
      }
      p = p + m;
    }
    return p;
  }

  Scalar scalar() {
    Poly d = poly(2, 1);
    if (d.is_zero()) d = Poly(1);
    return Scalar::fraction(poly(), d);
  }

  ParamAssignment point() { return {{"a", rational(20)}, {"b", rational(20)}, {"x", rational(20)}}; }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace axial::testing
