#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "cmkit/scalar.hpp"

namespace cmkit {

/// Key of the normal-ordered monomial x^a d^b, stored as (b, a) so that map
/// order follows the order filtration.
using WeylMonomial = std::pair<int, int>;
using WeylTerms = std::map<WeylMonomial, Rational>;

/// Element of the first Weyl algebra Q<x, d>/(dx - xd - 1), stored in normal
/// order (every x to the left of every d). No zero coefficient is stored, so
/// equality is equality of term maps.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement monomial(int a, int b, const Rational& c = Rational(1));
  static WeylElement constant(const Rational& c) { return monomial(0, 0, c); }
  static WeylElement x() { return monomial(1, 0); }
  static WeylElement d() { return monomial(0, 1); }

  const WeylTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int a, int b) const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const Rational& s, const WeylElement& u);
  friend WeylElement operator*(const WeylElement& u, const WeylElement& v);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  std::string to_string() const;

 private:
  friend WeylElement weyl_mul(const WeylElement&, const WeylElement&);
  void add_term(const WeylMonomial& m, const Rational& c);
  WeylTerms terms_;
};

/// Normal-ordered product.
WeylElement weyl_mul(const WeylElement& u, const WeylElement& v);

/// Maximal d-degree; throws std::domain_error for the zero element.
int order(const WeylElement& u);

/// Coefficients of x^c-reordering: d^b x^c = sum_k leibniz(b, c, k) x^(c-k) d^(b-k),
/// valid for every integer b (the sum is finite because x^c is polynomial).
Rational leibniz_coefficient(int b, int c, int k);

class CutoffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated element of the microlocalization Q[x]((d^-1)).
///
/// Terms are kept for d-degrees in [-bottom, top]. Products that would need
/// a d-degree above `top` raise CutoffError. Terms that fall below -bottom are
/// discarded; the element then records `exact_from()`, the lowest d-degree
/// whose coefficient is still known exactly. Discarded information propagates
/// through later products, so stored coefficients are never silently wrong.
class MicrolocalElement {
 public:
  MicrolocalElement(int top, int bottom);
  static MicrolocalElement monomial(int a, int b, const Rational& c, int top, int bottom);
  static MicrolocalElement embed(const WeylElement& u, int top, int bottom);

  int top() const { return top_; }
  int bottom() const { return bottom_; }
  bool truncated() const { return exact_from_.has_value(); }
  /// Lowest d-degree known exactly; nullopt when nothing was ever discarded.
  std::optional<int> exact_from() const { return exact_from_; }
  const WeylTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int a, int b) const;

  MicrolocalElement& operator+=(const MicrolocalElement& o);
  MicrolocalElement& operator-=(const MicrolocalElement& o);
  friend MicrolocalElement operator+(MicrolocalElement a, const MicrolocalElement& b) { return a += b; }
  friend MicrolocalElement operator-(MicrolocalElement a, const MicrolocalElement& b) { return a -= b; }
  friend bool operator==(const MicrolocalElement&, const MicrolocalElement&) = default;

  /// Same element with all terms of d-degree < `degree` dropped and flagged.
  MicrolocalElement truncated_below(int degree) const;
  /// Back to the Weyl algebra; throws std::domain_error on a negative
  /// d-degree term or a truncated element.
  WeylElement to_weyl() const;

  std::string to_string() const;

 private:
  friend MicrolocalElement micro_mul(const MicrolocalElement&, const MicrolocalElement&);
  void check_compatible(const MicrolocalElement& o) const;
  void add_term(const WeylMonomial& m, const Rational& c);
  // Largest d-degree the true value may carry (stored or lost).
  std::optional<int> highest_possible() const;

  int top_;
  int bottom_;
  WeylTerms terms_;
  std::optional<int> exact_from_;
};

/// Product in the microlocalization; both factors need identical cutoffs.
MicrolocalElement micro_mul(const MicrolocalElement& u, const MicrolocalElement& v);

struct CechRanks {
  int twist = 0;
  int h0_rank = 0;
  int h1_rank = 0;
  bool certified = false;
};

/// Ranks, as free Q[x]-modules, of the kernel and cokernel of
/// D (+) E^twist -> E, (P, e) |-> P - e, computed on finite windows of
/// d-degree [-w, w] for w = cutoff - 1 and w = cutoff. `certified` is set when
/// both windows agree. Throws std::invalid_argument if cutoff < |twist| + 2.
CechRanks cech_graded_ranks(int twist, int cutoff);

/// Dimensions of kernel and cokernel of the window map over Q, with d-degrees
/// in [-window, window] and x-degrees in [0, xdeg]. Exposed for testing.
std::pair<int, int> cech_window_dims(int twist, int window, int xdeg);

}  // namespace cmkit
