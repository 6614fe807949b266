#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "axial/error.hpp"
#include "axial/field/params.hpp"

namespace axial {

// Exponent vectors are packed into a 64-bit word, one byte per parameter,
// parameter 0 in the most significant byte.  With that layout, integer
// comparison of two monomials of equal total degree is lexicographic
// comparison, so graded-lex order is (total degree, raw value).
using Monomial = std::uint64_t;

namespace mono {

inline constexpr unsigned shift(std::size_t var) {
  return static_cast<unsigned>(8 * (kMaxParams - 1 - var));
}

inline unsigned exponent(Monomial m, std::size_t var) { return (m >> shift(var)) & 0xffU; }

inline Monomial power(std::size_t var, unsigned e) {
  if (e > 255) throw Error(ErrorKind::BadParameter, "exponent overflow");
  return static_cast<Monomial>(e) << shift(var);
}

// Exponents are split into 16-bit lanes (even and odd bytes) so that lane
// sums and differences cannot carry into a neighbour.
inline constexpr Monomial kEvenBytes = 0x00ff00ff00ff00ffULL;
inline constexpr Monomial kLaneCarry = 0x0100010001000100ULL;

inline unsigned degree(Monomial m) {
  Monomial x = (m & kEvenBytes) + ((m >> 8) & kEvenBytes);
  x = (x & 0x0000ffff0000ffffULL) + ((x >> 16) & 0x0000ffff0000ffffULL);
  return static_cast<unsigned>((x & 0xffffffffULL) + (x >> 32));
}

inline bool grlex_less(Monomial a, Monomial b) {
  const unsigned da = degree(a);
  const unsigned db = degree(b);
  return da != db ? da < db : a < b;
}

/// True when every exponent of `a` is at most the matching one of `b`.
inline bool divides(Monomial a, Monomial b) {
  const auto lanes_ok = [](Monomial x, Monomial y) {
    return ((((x & kEvenBytes) | kLaneCarry) - (y & kEvenBytes)) & kLaneCarry) == kLaneCarry;
  };
  return lanes_ok(b, a) && lanes_ok(b >> 8, a >> 8);
}

inline Monomial multiply(Monomial a, Monomial b) {
  const Monomial even = (a & kEvenBytes) + (b & kEvenBytes);
  const Monomial odd = ((a >> 8) & kEvenBytes) + ((b >> 8) & kEvenBytes);
  if ((even | odd) & kLaneCarry) throw Error(ErrorKind::BadParameter, "exponent overflow");
  return a + b;
}

inline Monomial without(Monomial m, std::size_t var) { return m & ~(Monomial{0xff} << shift(var)); }

inline std::uint32_t support(Monomial m) {
  std::uint32_t mask = 0;
  for (std::size_t v = 0; v < kMaxParams; ++v) {
    if (exponent(m, v) != 0) mask |= 1U << v;
  }
  return mask;
}

}  // namespace mono

/// Multivariate polynomial over Q in the registered parameters.  Terms are
/// kept in strictly decreasing graded-lex order with no zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Poly() = default;
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c) {           // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({0, c});
  }

  static Poly variable(std::size_t var, unsigned e = 1) {
    Poly p;
    p.terms_.push_back({mono::power(var, e), Rational(1)});
    return p;
  }

  static Poly param(std::string_view name) {
    return variable(ParamRegistry::instance().index_of(name));
  }

  /// Builds a polynomial from unsorted terms, merging duplicates.
  static Poly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& l, const Term& r) { return mono::grlex_less(r.mono, l.mono); });
    Poly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0); }
  Rational constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.back().mono == 0 ? terms_.back().coeff : Rational(0);
  }

  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  unsigned total_degree() const { return terms_.empty() ? 0 : mono::degree(terms_.front().mono); }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, mono::exponent(t.mono, var));
    return d;
  }

  std::uint32_t support() const {
    std::uint32_t mask = 0;
    for (const auto& t : terms_) mask |= mono::support(t.mono);
    return mask;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
    if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) out.push_back({mono::multiply(s.mono, t.mono), s.coeff * t.coeff});
    }
    return from_terms(std::move(out));
  }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const Rational& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Poly times_monomial(Monomial m, const Rational& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& t : r.terms_) {
      t.mono = mono::multiply(t.mono, m);
      t.coeff *= c;
    }
    return r;  // multiplying by a monomial preserves the order
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Total order used for sets of certificate polynomials.
  friend bool operator<(const Poly& a, const Poly& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = a.terms_[i];
      const auto& t = b.terms_[i];
      if (s.mono != t.mono) return mono::grlex_less(s.mono, t.mono);
      if (s.coeff != t.coeff) return s.coeff < t.coeff;
    }
    return a.terms_.size() < b.terms_.size();
  }

  Rational eval(const ParamAssignment& at) const {
    auto& reg = ParamRegistry::instance();
    std::array<std::optional<Rational>, kMaxParams> values;
    const auto used = support();
    for (std::size_t v = 0; v < kMaxParams; ++v) {
      if (!(used & (1U << v))) continue;
      const auto name = reg.name(v);
      const auto it = at.find(name);
      if (it == at.end()) throw Error(ErrorKind::MissingParameter, "no value for '" + name + "'");
      values[v] = it->second;
    }
    Rational sum = 0;
    for (const auto& t : terms_) {
      Rational term = t.coeff;
      for (std::size_t v = 0; v < kMaxParams; ++v) {
        for (unsigned e = mono::exponent(t.mono, v); e > 0; --e) term *= *values[v];
      }
      sum += term;
    }
    return sum;
  }

  /// Substitutes values for the parameters named in `at`; others stay symbolic.
  Poly specialize(const ParamAssignment& at) const {
    auto& reg = ParamRegistry::instance();
    std::array<std::optional<Rational>, kMaxParams> values;
    for (const auto& [name, value] : at) {
      if (auto idx = reg.find(name)) values[*idx] = value;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Term r{t.mono, t.coeff};
      for (std::size_t v = 0; v < kMaxParams; ++v) {
        if (!values[v]) continue;
        for (unsigned e = mono::exponent(t.mono, v); e > 0; --e) r.coeff *= *values[v];
        r.mono = mono::without(r.mono, v);
      }
      out.push_back(std::move(r));
    }
    return from_terms(std::move(out));
  }

  Poly permuted(const ParamPermutation& perm) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m = 0;
      for (std::size_t v = 0; v < kMaxParams; ++v) m |= mono::power(perm(v), mono::exponent(t.mono, v));
      out.push_back({m, t.coeff});
    }
    return from_terms(std::move(out));
  }

  /// Human-readable form, e.g. "3*a^2*b - 1/2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    auto& reg = ParamRegistry::instance();
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      Rational c = t.coeff;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      c = abs(c);
      std::string mon;
      for (std::size_t v = 0; v < kMaxParams; ++v) {
        const unsigned e = mono::exponent(t.mono, v);
        if (e == 0) continue;
        if (!mon.empty()) mon += "*";
        mon += reg.name(v);
        if (e > 1) mon += "^" + std::to_string(e);
      }
      if (mon.empty()) {
        out += axial::to_string(c);
      } else if (c == 1) {
        out += mon;
      } else {
        out += axial::to_string(c) + "*" + mon;
      }
    }
    return out;
  }

 private:
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && mono::grlex_less(b.terms_[j].mono, a.terms_[i].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || mono::grlex_less(a.terms_[i].mono, b.terms_[j].mono)) {
        r.terms_.push_back(b.terms_[j++]);
        if (subtract) r.terms_.back().coeff = -r.terms_.back().coeff;
      } else {
        Rational c = subtract ? Rational(a.terms_[i].coeff - b.terms_[j].coeff) : Rational(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

/// Scales so the graded-lex leading coefficient is 1.
inline Poly monic(const Poly& p) {
  if (p.is_zero() || p.leading_coeff() == 1) return p;
  return p.scaled(1 / p.leading_coeff());
}

/// Exact quotient a / b, or nullopt when b does not divide a.
inline std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (b.is_constant()) return a.scaled(1 / b.leading_coeff());
  std::vector<Poly::Term> quotient;
  Poly rem = a;
  const auto& lead = b.leading_term();
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    if (!mono::divides(lead.mono, lt.mono)) return std::nullopt;
    const Monomial m = lt.mono - lead.mono;
    const Rational c = lt.coeff / lead.coeff;
    quotient.push_back({m, c});
    rem -= b.times_monomial(m, c);
  }
  return Poly::from_terms(std::move(quotient));
}

namespace detail {

// A polynomial viewed as univariate in `var`, coefficient k holding the
// terms of degree k with `var` stripped.
using Univariate = std::vector<Poly>;

inline Univariate split(const Poly& p, std::size_t var) {
  std::vector<std::vector<Poly::Term>> buckets(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    buckets[mono::exponent(t.mono, var)].push_back({mono::without(t.mono, var), t.coeff});
  }
  Univariate out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
  return out;
}

inline Poly join(const Univariate& u, std::size_t var) {
  Poly out;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!u[k].is_zero()) out += u[k].times_monomial(mono::power(var, static_cast<unsigned>(k)), 1);
  }
  return out;
}

inline void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

}  // namespace detail

inline Poly gcd(const Poly& a, const Poly& b);

namespace detail {

inline Poly content(const Univariate& u) {
  Poly c;
  for (const auto& k : u) {
    if (k.is_zero()) continue;
    c = c.is_zero() ? monic(k) : gcd(c, k);
    if (c.is_constant()) return Poly(1);
  }
  return c;
}

// Rescales to integer coefficients with gcd 1; keeps PRS coefficients small.
inline void strip_numeric_content(Univariate& u) {
  mpz_class den = 1;
  mpz_class num = 0;
  for (const auto& k : u) {
    for (const auto& t : k.terms()) {
      den = lcm(den, mpz_class(t.coeff.get_den()));
      num = gcd(num, mpz_class(t.coeff.get_num()));
    }
  }
  if (num == 0 || (den == 1 && num == 1)) return;
  Rational scale(den, num);
  scale.canonicalize();
  for (auto& k : u) k = k.scaled(scale);
}

inline Univariate primitive(Univariate u) {
  const Poly c = content(u);
  if (!c.is_constant()) {
    for (auto& k : u) k = *exact_divide(k, c);
  }
  strip_numeric_content(u);
  return u;
}

// Pseudo-remainder lc(b)^(deg r - deg b + 1) * r mod b.
inline Univariate pseudo_remainder(Univariate r, const Univariate& b) {
  const Poly& lb = b.back();
  if (r.size() < b.size()) return r;
  for (std::size_t top = r.size(); top-- >= b.size();) {
    const Poly lr = r[top];
    const std::size_t shift = top + 1 - b.size();
    for (auto& k : r) k *= lb;
    if (!lr.is_zero()) {
      for (std::size_t j = 0; j < b.size(); ++j) r[j + shift] -= lr * b[j];
    }
    if (top == 0) break;
  }
  trim(r);
  return r;
}

inline Poly power(const Poly& p, std::size_t e) {
  Poly r(1);
  for (std::size_t i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace detail

/// Monic greatest common divisor, by recursive content / primitive-part
/// elimination one variable at a time.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (exact_divide(a, b)) return monic(b);
  if (exact_divide(b, a)) return monic(a);

  const std::uint32_t used = a.support() | b.support();
  std::size_t var = 0;
  while (!(used & (1U << var))) ++var;

  auto ua = detail::split(a, var);
  auto ub = detail::split(b, var);
  const Poly common = gcd(detail::content(ua), detail::content(ub));
  ua = detail::primitive(std::move(ua));
  ub = detail::primitive(std::move(ub));
  if (ua.size() < ub.size()) std::swap(ua, ub);

  // Subresultant PRS: the divisions below are exact and keep coefficient
  // growth polynomial; the content is removed once at the end.
  detail::Univariate g;
  Poly lead_g(1);
  Poly h(1);
  while (true) {
    if (ub.size() == 1) {
      g = {Poly(1)};
      break;
    }
    const std::size_t delta = ua.size() - ub.size();
    auto r = detail::pseudo_remainder(ua, ub);
    if (r.empty()) {
      g = detail::primitive(std::move(ub));
      break;
    }
    const Poly divisor = lead_g * detail::power(h, delta);
    for (auto& k : r) k = *exact_divide(k, divisor);
    ua = std::move(ub);
    ub = std::move(r);
    lead_g = ua.back();
    if (delta == 1) {
      h = lead_g;
    } else if (delta > 1) {
      h = *exact_divide(detail::power(lead_g, delta), detail::power(h, delta - 1));
    }
  }
  return monic(common * detail::join(g, var));
}

}  // namespace axial
