#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cmkit/scalar.hpp"

namespace cmkit {

/// Dense univariate polynomial over the rationals, coefficients ascending.
/// Trailing zeros are never stored, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
  /// x - root
  static Polynomial linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational operator()(const Rational& t) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division; throws std::domain_error on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd (zero if both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  /// Human-readable form in the variable `var`, e.g. "x^2 - 1/2*x + 3".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct Factor {
  Polynomial factor;  // monic, irreducible over the rationals
  int multiplicity = 0;
};

/// Squarefree decomposition (Yun): pairs (s_k, k) with p = lc * prod s_k^k,
/// each s_k monic, squarefree and pairwise coprime. Empty for constants.
std::vector<Factor> squarefree_decomposition(const Polynomial& p);

/// Complete factorization into monic irreducibles over the rationals, sorted
/// by (degree, coefficients). Multiplicities sum to deg p.
std::vector<Factor> factor_rational(const Polynomial& p);

/// True iff every irreducible factor is linear (all roots rational).
bool splits_over_rationals(const Polynomial& p);

/// Rational roots of p without multiplicity, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

}  // namespace cmkit
