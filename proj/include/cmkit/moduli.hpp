#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cmkit/koszul.hpp"
#include "cmkit/poly.hpp"

namespace cmkit {

/// Framed torsion sheaf on the affine line: Q = coker(x - X) of length n with
/// framing O^r -> Q given by the columns of i.
template <class T>
struct FramedTorsionSheaf {
  Matrix<T> X;
  Matrix<T> i;

  std::size_t n() const { return X.rows(); }
  std::size_t r() const { return i.cols(); }
  void validate() const;
};

/// Characteristic polynomial of X as a rational polynomial.
Polynomial char_polynomial(const Matrix<Rational>& X);

/// Irreducible factors of char_poly(X) over the rationals with multiplicity.
std::vector<Factor> support(const FramedTorsionSheaf<Rational>& fs);

struct NumericRoot {
  Complex value;
  int multiplicity = 0;
};

/// Eigenvalues of X clustered within `cluster_radius`, each cluster reported
/// by its mean.
std::vector<NumericRoot> support(const FramedTorsionSheaf<Complex>& fs, double cluster_radius);

/// True iff the columns of i generate the space under X alone.
template <class T>
bool framing_surjective(const FramedTorsionSheaf<T>& fs, const Field<T>& field = {});

/// Endomorphism (s, g) of a framed sheaf: g X = X g and g i = i s.
template <class T>
struct Endomorphism {
  Matrix<T> s;  // r x r
  Matrix<T> g;  // n x n

  friend Endomorphism operator*(const Endomorphism& a, const Endomorphism& b) { return {a.s * b.s, a.g * b.g}; }
  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
};

/// Basis of the endomorphism algebra.
template <class T>
std::vector<Endomorphism<T>> endomorphisms(const FramedTorsionSheaf<T>& fs, const Field<T>& field = {});

/// Coordinates of e in the given basis, or nullopt if e is outside its span.
template <class T>
std::optional<Vector<T>> endomorphism_coordinates(const std::vector<Endomorphism<T>>& basis,
                                                  const Endomorphism<T>& e, const Field<T>& field = {});

enum class Indecomposability { indecomposable, decomposable, inconclusive };

const char* to_string(Indecomposability v);

struct IndecomposabilityReport {
  Indecomposability verdict = Indecomposability::inconclusive;
  std::size_t end_dim = 0;
  std::size_t radical_dim = 0;
  bool spectrum_splits = false;
};

/// Decides whether End(fs) is local via the radical of the trace form
/// tr(L_{ab}) of the regular representation: local iff End/rad has
/// dimension one. A larger quotient is reported as decomposable only when
/// char_poly(X) splits over the rationals, otherwise as inconclusive.
/// Exact arithmetic only.
IndecomposabilityReport indecomposability(const FramedTorsionSheaf<Rational>& fs);

inline Indecomposability is_indecomposable(const FramedTorsionSheaf<Rational>& fs) {
  return indecomposability(fs).verdict;
}

struct SupportCheck {
  bool in_support = false;
  std::optional<std::size_t> fiber_dim;
};

/// Whether the CM fiber over fs is nonempty, and its affine dimension.
template <class T>
SupportCheck cm_support_check(const FramedTorsionSheaf<T>& fs, const Field<T>& field = {});

}  // namespace cmkit
