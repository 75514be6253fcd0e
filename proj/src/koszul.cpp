#include "cmkit/koszul.hpp"

#include <algorithm>
#include <tuple>
#include <type_traits>

namespace cmkit {

namespace {

template <class T>
std::vector<std::string> entry_strings(const Matrix<T>& m) {
  std::vector<std::string> out;
  for (const auto& v : m.data()) {
    if constexpr (std::is_same_v<T, Rational>) {
      out.push_back(v.get_str());
    } else {
      out.push_back("(" + std::to_string(v.real()) + "," + std::to_string(v.imag()) + ")");
    }
  }
  return out;
}

}  // namespace

template <class T>
PolyCovector<T>::PolyCovector(std::vector<Matrix<T>> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DimensionError("polynomial covector needs at least one coefficient");
  for (const auto& c : coeffs_) {
    if (c.rows() != coeffs_.front().rows() || c.cols() != coeffs_.front().cols())
      throw DimensionError("polynomial covector coefficients have different shapes");
  }
  while (coeffs_.size() > 1 && coeffs_.back() == Matrix<T>(rows(), cols())) coeffs_.pop_back();
}

template <class T>
PolyCovector<T> PolyCovector<T>::trimmed(const Field<T>& field) const {
  std::vector<Matrix<T>> c = coeffs_;
  while (c.size() > 1 && c.back().is_zero(field)) c.pop_back();
  return PolyCovector(std::move(c));
}

template <class T>
Matrix<T> PolyCovector<T>::framed(const Matrix<T>& X, const Matrix<T>& framing) const {
  Matrix<T> acc = framing * coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = X * acc + framing * coeffs_[k];
  return acc;
}

template <class T>
void KoszulTriple<T>::validate() const {
  CMQuadruple<T>{X, Y, i, j.coeffs().front()}.validate();
}

template <class T>
KoszulTriple<T> from_cm(const CMQuadruple<T>& q, const Field<T>& field) {
  if (!is_cm_point(q, field)) throw PreconditionError("input is not a CM point");
  return {q.X, q.i, q.Y, PolyCovector<T>::constant(q.j)};
}

template <class T>
Matrix<T> check_square(const KoszulTriple<T>& kt) {
  kt.validate();
  return Matrix<T>::identity(kt.n()) + commutator(kt.X, kt.Y) - kt.j.framed(kt.X, kt.i);
}

template <class T>
KoszulTriple<T> apply_homotopy(const KoszulTriple<T>& kt, const PolyCovector<T>& h) {
  kt.validate();
  if (h.rows() != kt.r() || h.cols() != kt.n()) {
    throw DimensionError("homotopy coefficients must be " + std::to_string(kt.r()) + "x" + std::to_string(kt.n()) +
                         ", got " + h.coeffs().front().shape());
  }
  const std::size_t top = std::max(kt.j.degree(), h.degree() + 1);
  std::vector<Matrix<T>> j(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    j[k] = kt.j.coeff(k) - h.coeff(k) * kt.X;
    if (k > 0) j[k] += h.coeff(k - 1);
  }
  return {kt.X, kt.i, kt.Y + h.framed(kt.X, kt.i), PolyCovector<T>(std::move(j))};
}

template <class T>
PolyCovector<T> normalizing_homotopy(const KoszulTriple<T>& kt) {
  kt.validate();
  const std::size_t d = kt.j.degree();
  if (d == 0) return PolyCovector<T>::zero(kt.r(), kt.n());
  std::vector<Matrix<T>> h(d);
  h[d - 1] = -kt.j.coeff(d);
  for (std::size_t k = d - 1; k >= 1; --k) h[k - 1] = h[k] * kt.X - kt.j.coeff(k);
  return PolyCovector<T>(std::move(h));
}

template <class T>
CMQuadruple<T> normalize(const KoszulTriple<T>& kt, const Field<T>& field) {
  const Matrix<T> residual = check_square(kt);
  if (!residual.is_zero(field)) throw SquareError("Koszul square does not commute", entry_strings(residual));
  const PolyCovector<T> h = normalizing_homotopy(kt);
  return {kt.X, kt.Y + h.framed(kt.X, kt.i), kt.i, kt.j.coeff(0) - h.coeff(0) * kt.X};
}

template <class T>
std::optional<FiberSolution<T>> solve_cm_fiber(const Matrix<T>& X, const Matrix<T>& i, const Field<T>& field) {
  const std::size_t n = X.rows();
  if (n == 0 || !X.is_square()) throw DimensionError("X must be a nonempty square matrix, got " + X.shape());
  if (i.rows() != n || i.cols() == 0) throw DimensionError("i must be " + std::to_string(n) + "xr with r >= 1");
  const std::size_t r = i.cols();
  const auto y_index = [n](std::size_t row, std::size_t col) { return row + col * n; };
  const auto j_index = [n](std::size_t row, std::size_t col) { return n * n + row * n + col; };

  Matrix<T> system(n * n, n * n + r * n);
  Vector<T> rhs(n * n, T(0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t eq = a * n + b;
      for (std::size_t c = 0; c < n; ++c) {
        system(eq, y_index(c, b)) += X(a, c);
        system(eq, y_index(a, c)) -= X(c, b);
      }
      for (std::size_t p = 0; p < r; ++p) system(eq, j_index(p, b)) -= i(a, p);
      if (a == b) rhs[eq] = T(-1);
    }
  }

  const auto solved = solve_affine(system, rhs, field);
  if (!solved) return std::nullopt;

  const auto unpack = [&](const Vector<T>& v) {
    Matrix<T> y(n, n), j(r, n);
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t col = 0; col < n; ++col) y(row, col) = v[y_index(row, col)];
    for (std::size_t row = 0; row < r; ++row)
      for (std::size_t col = 0; col < n; ++col) j(row, col) = v[j_index(row, col)];
    return std::pair{std::move(y), std::move(j)};
  };

  FiberSolution<T> out;
  out.X = X;
  out.i = i;
  std::tie(out.Y, out.j) = unpack(solved->particular);
  for (const auto& v : solved->kernel) out.kernel.push_back(unpack(v));
  return out;
}

template <class T>
std::pair<Matrix<T>, Matrix<T>> torsor_action(const FiberSolution<T>& sol, const std::vector<T>& t) {
  if (t.size() != sol.kernel.size()) {
    throw DimensionError("torsor_action: " + std::to_string(t.size()) + " coefficients for a " +
                         std::to_string(sol.kernel.size()) + "-dimensional kernel");
  }
  Matrix<T> y = sol.Y, j = sol.j;
  for (std::size_t m = 0; m < t.size(); ++m) {
    y += t[m] * sol.kernel[m].first;
    j += t[m] * sol.kernel[m].second;
  }
  return {std::move(y), std::move(j)};
}

template <class T>
std::optional<std::vector<T>> torsor_coordinates(const FiberSolution<T>& sol, const Matrix<T>& Y, const Matrix<T>& j,
                                                 const Field<T>& field) {
  if (Y.rows() != sol.Y.rows() || Y.cols() != sol.Y.cols() || j.rows() != sol.j.rows() || j.cols() != sol.j.cols())
    throw DimensionError("torsor_coordinates: shape mismatch");
  const auto flatten = [](const Matrix<T>& a, const Matrix<T>& b) {
    Vector<T> v = a.data();
    v.insert(v.end(), b.data().begin(), b.data().end());
    return v;
  };
  std::vector<Vector<T>> cols;
  for (const auto& [ky, kj] : sol.kernel) cols.push_back(flatten(ky, kj));
  const Vector<T> target = flatten(Y - sol.Y, j - sol.j);
  const auto solved = solve_affine(from_columns(cols, target.size()), target, field);
  if (!solved) return std::nullopt;
  return solved->particular;
}

#define CMKIT_INSTANTIATE_KOSZUL(T)                                                                                  \
  template class PolyCovector<T>;                                                                                   \
  template struct KoszulTriple<T>;                                                                                  \
  template KoszulTriple<T> from_cm(const CMQuadruple<T>&, const Field<T>&);                                         \
  template Matrix<T> check_square(const KoszulTriple<T>&);                                                          \
  template KoszulTriple<T> apply_homotopy(const KoszulTriple<T>&, const PolyCovector<T>&);                          \
  template PolyCovector<T> normalizing_homotopy(const KoszulTriple<T>&);                                            \
  template CMQuadruple<T> normalize(const KoszulTriple<T>&, const Field<T>&);                                       \
  template std::optional<FiberSolution<T>> solve_cm_fiber(const Matrix<T>&, const Matrix<T>&, const Field<T>&);     \
  template std::pair<Matrix<T>, Matrix<T>> torsor_action(const FiberSolution<T>&, const std::vector<T>&);           \
  template std::optional<std::vector<T>> torsor_coordinates(const FiberSolution<T>&, const Matrix<T>&, const Matrix<T>&, \
                                                            const Field<T>&);

CMKIT_INSTANTIATE_KOSZUL(Rational)
CMKIT_INSTANTIATE_KOSZUL(Complex)

}  // namespace cmkit
