#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <string>

namespace cmkit {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Zero tests and pivot policy for a scalar type.
///
/// The rational field is exact and stateless. The complex field carries the
/// comparison tolerance used by every rank decision made through it.
template <class T>
struct Field;

template <>
struct Field<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";

  bool is_zero(const Rational& v) const { return sgn(v) == 0; }
  // First nonzero entry wins; magnitude is irrelevant in exact arithmetic.
  bool better_pivot(const Rational&, const Rational&) const { return false; }
};

template <>
struct Field<Complex> {
  static constexpr bool exact = false;
  static constexpr const char* name = "complex";
  static constexpr double default_tolerance = 1e-9;

  double tolerance = default_tolerance;

  bool is_zero(const Complex& v) const { return std::abs(v) <= tolerance; }
  bool better_pivot(const Complex& candidate, const Complex& current) const {
    return std::abs(candidate) > std::abs(current);
  }
};

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, Complex>;

/// Canonical text form: "p/q" (or "p" for integers).
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace cmkit
