#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cmkit/matrix.hpp"

namespace cmkit {

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class T>
using Vector = std::vector<T>;

/// Reduced row echelon form together with its pivot columns.
template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination. Pivots are chosen column by column: the first
/// nonzero entry for exact scalars, the largest modulus for floating ones.
/// Entries the field deems zero are flushed to exact zero.
template <class T>
Echelon<T> rref(Matrix<T> m, const Field<T>& field = {}) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (field.is_zero(m(r, col))) continue;
      if (best == m.rows()) {
        best = r;
        if constexpr (Field<T>::exact) break;
      } else if (field.better_pivot(m(r, col), m(best, col))) {
        best = r;
      }
    }
    if (best == m.rows()) {
      for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = T(0);
      continue;
    }
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));

    const T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == T(0)) continue;
      const T factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
      m(r, col) = T(0);
    }
    pivots.push_back(col);
    ++row;
  }
  if constexpr (!Field<T>::exact) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (field.is_zero(m(r, c))) m(r, c) = T(0);
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& a, const Field<T>& field = {}) {
  return rref(a, field).rank();
}

namespace detail {

template <class T>
std::vector<Vector<T>> kernel_from_echelon(const Echelon<T>& e, std::size_t unknowns) {
  std::vector<bool> is_pivot(unknowns, false);
  for (auto c : e.pivot_cols)
    if (c < unknowns) is_pivot[c] = true;
  std::vector<Vector<T>> basis;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    Vector<T> v(unknowns, T(0));
    v[free] = T(1);
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
      if (e.pivot_cols[k] < unknowns) v[e.pivot_cols[k]] = -e.reduced(k, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Basis of {v : A v = 0}, one vector per free column in increasing order.
template <class T>
std::vector<Vector<T>> kernel_basis(const Matrix<T>& a, const Field<T>& field = {}) {
  return detail::kernel_from_echelon(rref(a, field), a.cols());
}

template <class T>
struct AffineSolution {
  Vector<T> particular;
  std::vector<Vector<T>> kernel;
};

/// Solves A x = b. Returns the particular solution with all free unknowns set
/// to zero plus a kernel basis, or nullopt when the system is inconsistent.
template <class T>
std::optional<AffineSolution<T>> solve_affine(const Matrix<T>& a, const Vector<T>& b,
                                              const Field<T>& field = {}) {
  if (b.size() != a.rows()) {
    throw DimensionError("solve_affine: rhs has " + std::to_string(b.size()) + " entries for a " + a.shape() +
                         " system");
  }
  const auto e = rref(hstack(a, Matrix<T>::column(b)), field);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;

  AffineSolution<T> out;
  out.particular.assign(a.cols(), T(0));
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) out.particular[e.pivot_cols[k]] = e.reduced(k, a.cols());
  out.kernel = detail::kernel_from_echelon(e, a.cols());
  return out;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& g, const Field<T>& field = {}) {
  g.require_square("inverse");
  const std::size_t n = g.rows();
  const auto e = rref(hstack(g, Matrix<T>::identity(n)), field);
  if (e.rank() < n || e.pivot_cols[n - 1] != n - 1) throw SingularMatrixError("matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

template <class T>
Vector<T> mat_vec(const Matrix<T>& a, const Vector<T>& v) {
  return (a * Matrix<T>::column(v)).column_vector(0);
}

/// Characteristic polynomial det(t I - A), coefficients ascending in t, monic.
/// Faddeev-LeVerrier recursion (characteristic zero only).
template <class T>
Vector<T> char_poly(const Matrix<T>& a) {
  a.require_square("char_poly");
  const std::size_t n = a.rows();
  Vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t d = 0; d < n; ++d) m(d, d) += c[n - k + 1];
    c[n - k] = -(a * m).trace() / T(static_cast<long>(k));
  }
  return c;
}

/// Sum of coeffs[k] X^k (Horner).
template <class T>
Matrix<T> eval_matrix_poly(const Vector<T>& coeffs, const Matrix<T>& x) {
  x.require_square("eval_matrix_poly");
  Matrix<T> acc(x.rows(), x.cols());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x;
    for (std::size_t d = 0; d < x.rows(); ++d) acc(d, d) += *it;
  }
  return acc;
}

/// Column-stacked matrix whose columns are the given vectors (each of length n).
template <class T>
Matrix<T> from_columns(const std::vector<Vector<T>>& cols, std::size_t n) {
  Matrix<T> m(n, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != n) throw DimensionError("from_columns: ragged input");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

}  // namespace cmkit
