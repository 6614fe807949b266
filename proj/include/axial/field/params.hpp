#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "axial/error.hpp"

namespace axial {

using Rational = mpq_class;

/// Upper bound on the number of distinct parameters a process may use.
/// Exponent vectors are packed one byte per parameter into a 64-bit word.
inline constexpr std::size_t kMaxParams = 8;

/// Name used when printing elements of Q(omega); never a parameter name.
inline constexpr std::string_view kOmegaName = "omega";

inline bool is_valid_param_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

/// Process-wide, append-only map from parameter names to variable indices.
/// The index order is the global monomial order: a, b, x, y come first
/// (a = alpha, b = beta), later names are appended as they are first seen.
class ParamRegistry {
 public:
  static ParamRegistry& instance() {
    static ParamRegistry registry;
    return registry;
  }

  std::size_t index_of(std::string_view name) {
    std::lock_guard lock(mutex_);
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    if (!is_valid_param_name(name) || name == kOmegaName) {
      throw Error(ErrorKind::ParseError, "invalid parameter name '" + std::string(name) + "'");
    }
    if (names_.size() == kMaxParams) {
      throw Error(ErrorKind::BadParameter, "too many parameters (limit 8)");
    }
    names_.emplace_back(name);
    return names_.size() - 1;
  }

  std::optional<std::size_t> find(std::string_view name) const {
    std::lock_guard lock(mutex_);
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::string name(std::size_t index) const {
    std::lock_guard lock(mutex_);
    return names_.at(index);
  }

 private:
  ParamRegistry() : names_{"a", "b", "x", "y"} {}

  mutable std::mutex mutex_;
  std::vector<std::string> names_;
};

/// Rational values for named parameters.
using ParamAssignment = std::map<std::string, Rational>;

/// A permutation of parameters (e.g. x <-> y), applied to coefficients by
/// semiautomorphisms.  Unlisted parameters are fixed.
class ParamPermutation {
 public:
  ParamPermutation() { reset(); }

  static ParamPermutation swap(std::string_view p, std::string_view q) {
    ParamPermutation perm;
    auto& reg = ParamRegistry::instance();
    const auto i = reg.index_of(p);
    const auto j = reg.index_of(q);
    std::swap(perm.image_[i], perm.image_[j]);
    return perm;
  }

  std::size_t operator()(std::size_t var) const { return image_[var]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < kMaxParams; ++i) {
      if (image_[i] != i) return false;
    }
    return true;
  }

 private:
  void reset() {
    for (std::size_t i = 0; i < kMaxParams; ++i) image_[i] = i;
  }

  std::array<std::size_t, kMaxParams> image_{};
};

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

/// Parses "p", "-p" or "p/q" with decimal integers.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  const auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find('-') != std::string::npos) {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
  if (d == 0) throw Error(ErrorKind::ZeroDenominator, "rational '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace axial
