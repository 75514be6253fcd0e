#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cmkit/adhm.hpp"

namespace cmkit {

/// Polynomial covector j(x) = sum_k x^k j_k with r x n coefficient matrices,
/// ascending in degree. The leading coefficient is nonzero unless the degree
/// is zero; the zero covector is stored as a single zero coefficient.
template <class T>
class PolyCovector {
 public:
  PolyCovector() = default;
  /// Trailing (exactly) zero coefficients are dropped. Throws DimensionError
  /// on an empty list or ragged shapes.
  explicit PolyCovector(std::vector<Matrix<T>> coeffs);
  static PolyCovector constant(const Matrix<T>& j) { return PolyCovector({j}); }
  static PolyCovector zero(std::size_t r, std::size_t n) { return PolyCovector({Matrix<T>(r, n)}); }

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::size_t rows() const { return coeffs_.front().rows(); }
  std::size_t cols() const { return coeffs_.front().cols(); }
  const std::vector<Matrix<T>>& coeffs() const { return coeffs_; }
  /// j_k, or zero beyond the degree.
  Matrix<T> coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Matrix<T>(rows(), cols()); }
  bool is_constant() const { return coeffs_.size() == 1; }

  /// Drops leading coefficients the field considers zero.
  PolyCovector trimmed(const Field<T>& field) const;

  /// sum_k X^k F j_k for a framing F (n x r): the matrix of f |-> f(X) F
  /// composed with j(x).
  Matrix<T> framed(const Matrix<T>& X, const Matrix<T>& framing) const;

  friend bool operator==(const PolyCovector&, const PolyCovector&) = default;

 private:
  std::vector<Matrix<T>> coeffs_;
};

/// Koszul data (X, i, Y, j(x)) with I + XY - YX = sum_k X^k i j_k.
template <class T>
struct KoszulTriple {
  Matrix<T> X;
  Matrix<T> i;
  Matrix<T> Y;
  PolyCovector<T> j;

  std::size_t n() const { return X.rows(); }
  std::size_t r() const { return i.cols(); }
  void validate() const;

  friend bool operator==(const KoszulTriple&, const KoszulTriple&) = default;
};

/// Constant-j triple of a CM point. Throws PreconditionError off the CM locus.
template <class T>
KoszulTriple<T> from_cm(const CMQuadruple<T>& q, const Field<T>& field = {});

/// I + XY - YX - sum_k X^k i j_k; zero iff the square commutes.
template <class T>
Matrix<T> check_square(const KoszulTriple<T>& kt);

/// Modifies kt by the homotopy h(x) = sum_k x^k h_k (r x n coefficients):
/// Y += sum_k X^k i h_k and j(x) += x h(x) - h(x) X.
template <class T>
KoszulTriple<T> apply_homotopy(const KoszulTriple<T>& kt, const PolyCovector<T>& h);

/// The homotopy that makes j(x) constant, by back-substitution from the top
/// coefficient: h_{d-1} = -j_d, h_{k-1} = h_k X - j_k. Degree max(d - 1, 0).
template <class T>
PolyCovector<T> normalizing_homotopy(const KoszulTriple<T>& kt);

class SquareError : public PreconditionError {
 public:
  explicit SquareError(std::string what, std::vector<std::string> residual = {})
      : PreconditionError(std::move(what)), residual_(std::move(residual)) {}
  const std::vector<std::string>& residual() const { return residual_; }

 private:
  std::vector<std::string> residual_;
};

/// Unique CM quadruple homotopic to kt. Throws SquareError (carrying the
/// residual entries) when check_square(kt) is nonzero.
template <class T>
CMQuadruple<T> normalize(const KoszulTriple<T>& kt, const Field<T>& field = {});

/// Affine space of CM quadruples over a fixed (X, i).
template <class T>
struct FiberSolution {
  Matrix<T> X;
  Matrix<T> i;
  Matrix<T> Y;  // particular solution
  Matrix<T> j;
  /// Basis of {(Y', j') : [X, Y'] = i j'}.
  std::vector<std::pair<Matrix<T>, Matrix<T>>> kernel;

  std::size_t dimension() const { return kernel.size(); }
};

/// Solves [X, Y] - i j + I = 0 for (Y, j). Unknowns are vectorized as Y
/// column-major then j row-major; the particular solution has every free
/// unknown zero. nullopt when (X, i) is outside the support.
template <class T>
std::optional<FiberSolution<T>> solve_cm_fiber(const Matrix<T>& X, const Matrix<T>& i, const Field<T>& field = {});

/// particular + sum_m t_m kernel_m. Throws DimensionError on a length mismatch.
template <class T>
std::pair<Matrix<T>, Matrix<T>> torsor_action(const FiberSolution<T>& sol, const std::vector<T>& t);

/// Coefficients t with (Y, j) = torsor_action(sol, t), or nullopt if (Y, j)
/// is not in the fiber.
template <class T>
std::optional<std::vector<T>> torsor_coordinates(const FiberSolution<T>& sol, const Matrix<T>& Y, const Matrix<T>& j,
                                                 const Field<T>& field = {});

}  // namespace cmkit
