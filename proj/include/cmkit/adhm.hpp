#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmkit/linalg.hpp"

namespace cmkit {

/// A mathematical precondition of an operation does not hold.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Matrices (X, Y, i, j) with X, Y n x n, i n x r, j r x n.
template <class T>
struct CMQuadruple {
  Matrix<T> X;
  Matrix<T> Y;
  Matrix<T> i;
  Matrix<T> j;

  std::size_t n() const { return X.rows(); }
  std::size_t r() const { return i.cols(); }

  /// Throws DimensionError unless the shapes agree and n, r >= 1.
  void validate() const;

  friend bool operator==(const CMQuadruple&, const CMQuadruple&) = default;
};

/// [X, Y] + i j
template <class T>
Matrix<T> moment_std(const CMQuadruple<T>& q);

/// [X, Y] - i j + I; zero exactly on CM points.
template <class T>
Matrix<T> cm_residual(const CMQuadruple<T>& q);

template <class T>
bool is_cm_point(const CMQuadruple<T>& q, const Field<T>& field = {}) {
  return cm_residual(q).is_zero(field);
}

/// (g X g^-1, g Y g^-1, g i, j g^-1). Throws SingularMatrixError.
template <class T>
CMQuadruple<T> conjugate(const CMQuadruple<T>& q, const Matrix<T>& g, const Field<T>& field = {});

/// Dimension of the smallest subspace containing the columns of `generators`
/// and invariant under every matrix in `ops`.
template <class T>
std::size_t invariant_span_dim(const Matrix<T>& generators, const std::vector<Matrix<T>>& ops,
                               const Field<T>& field = {});

/// True iff the columns of i generate the whole space under X and Y.
template <class T>
bool is_stable(const CMQuadruple<T>& q, const Field<T>& field = {});

struct WordInvariantKey {
  std::string kind;  // "tr" for tr(W), "jWi" for tr(j W i)
  std::string word;  // letters X and Y; empty word is the identity
};

template <class T>
struct WordInvariant {
  WordInvariantKey key;
  T value;
};

/// tr(W) for all words 1 <= |W| <= max_len and tr(j W i) for 0 <= |W| <= max_len
/// (a scalar when r = 1). A heuristic orbit separator: equal lists are
/// necessary, not sufficient, for conjugacy.
template <class T>
std::vector<WordInvariant<T>> word_invariants(const CMQuadruple<T>& q, std::size_t max_len);

template <class T>
struct HilbertIdeal {
  /// Monomials x^a y^b (as (a, b)), total degree ascending then a descending.
  std::vector<std::pair<int, int>> monomials;
  /// Basis of the degree-bounded part of the ideal, as coefficient vectors
  /// over `monomials`.
  std::vector<Vector<T>> basis;
  std::size_t quotient_dim = 0;
};

/// Kernel of f |-> f(X, Y) i on polynomials of total degree <= degree_bound.
/// Requires XY = YX, j = 0, r = 1 and stability; throws PreconditionError.
template <class T>
HilbertIdeal<T> hilbert_ideal(const CMQuadruple<T>& q, int degree_bound, const Field<T>& field = {});

/// Renders an ideal element, e.g. "x^2 - x".
std::string polynomial_string(const std::vector<std::pair<int, int>>& monomials, const Vector<Rational>& coeffs);

/// CM point with X = diag(xs) (distinct), i = is, j_k = 1 / i_k and
/// Y_kl = i_k j_l / (x_k - x_l) off the diagonal, Y_kk = ydiag_k.
CMQuadruple<Rational> cm_from_diagonal(const std::vector<Rational>& xs, const std::vector<Rational>& is,
                                       const std::vector<Rational>& ydiag);

/// Reproducible random CM point of size n (r = 1).
CMQuadruple<Rational> sample_cm(std::size_t n, std::uint64_t seed);

Matrix<Complex> to_complex(const Matrix<Rational>& m);
CMQuadruple<Complex> to_complex(const CMQuadruple<Rational>& q);

}  // namespace cmkit
