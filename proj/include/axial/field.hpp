#pragma once

#include <concepts>
#include <optional>
#include <type_traits>

#include "axial/field/omega.hpp"
#include "axial/field/params.hpp"
#include "axial/field/parse.hpp"
#include "axial/field/poly.hpp"
#include "axial/field/scalar.hpp"

namespace axial {

/// The two coefficient fields: Q(params) and Q(params)(omega).
template <class F>
concept Field = std::same_as<F, Scalar> || std::same_as<F, OmegaScalar>;

template <Field F>
inline constexpr bool has_omega = std::is_same_v<F, OmegaScalar>;

template <Field F>
F from_scalar(const Scalar& s) {
  if constexpr (has_omega<F>) {
    return OmegaScalar(s);
  } else {
    return s;
  }
}

template <Field F>
F parse_field(std::string_view text) {
  if constexpr (has_omega<F>) {
    return parse_omega_scalar(text);
  } else {
    return parse_scalar(text);
  }
}

/// Rational value of an omega-free, parameter-free element.
template <Field F>
std::optional<Rational> as_rational(const F& v) {
  if constexpr (has_omega<F>) {
    if (!v.im().is_zero() || !v.re().is_constant()) return std::nullopt;
    return v.re().constant_value();
  } else {
    if (!v.is_constant()) return std::nullopt;
    return v.constant_value();
  }
}

}  // namespace axial
