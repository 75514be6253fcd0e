#include "cmkit/adhm.hpp"

#include <algorithm>

#include "cmkit/random.hpp"

namespace cmkit {

template <class T>
void CMQuadruple<T>::validate() const {
  const std::size_t size = X.rows();
  const std::size_t rank = i.cols();
  if (size == 0) throw DimensionError("n must be at least 1");
  if (rank == 0) throw DimensionError("r must be at least 1");
  if (X.cols() != size) throw DimensionError("X must be square, got " + X.shape());
  if (Y.rows() != size || Y.cols() != size) throw DimensionError("Y must be " + X.shape() + ", got " + Y.shape());
  if (i.rows() != size) throw DimensionError("i must have " + std::to_string(size) + " rows, got " + i.shape());
  if (j.rows() != rank || j.cols() != size) {
    throw DimensionError("j must be " + std::to_string(rank) + "x" + std::to_string(size) + ", got " + j.shape());
  }
}

template <class T>
Matrix<T> moment_std(const CMQuadruple<T>& q) {
  q.validate();
  return commutator(q.X, q.Y) + q.i * q.j;
}

template <class T>
Matrix<T> cm_residual(const CMQuadruple<T>& q) {
  q.validate();
  return commutator(q.X, q.Y) - q.i * q.j + Matrix<T>::identity(q.n());
}

template <class T>
CMQuadruple<T> conjugate(const CMQuadruple<T>& q, const Matrix<T>& g, const Field<T>& field) {
  q.validate();
  if (g.rows() != q.n() || g.cols() != q.n()) throw DimensionError("g must be " + q.X.shape());
  const Matrix<T> ginv = inverse(g, field);
  return {g * q.X * ginv, g * q.Y * ginv, g * q.i, q.j * ginv};
}

template <class T>
std::size_t invariant_span_dim(const Matrix<T>& generators, const std::vector<Matrix<T>>& ops,
                               const Field<T>& field) {
  const std::size_t n = generators.rows();
  std::vector<Vector<T>> basis;
  std::vector<Vector<T>> queue;
  for (std::size_t c = 0; c < generators.cols(); ++c) queue.push_back(generators.column_vector(c));
  while (!queue.empty() && basis.size() < n) {
    Vector<T> v = std::move(queue.back());
    queue.pop_back();
    basis.push_back(v);
    if (rank(from_columns(basis, n), field) < basis.size()) {
      basis.pop_back();
      continue;
    }
    for (const auto& op : ops) queue.push_back(mat_vec(op, v));
  }
  return basis.size();
}

template <class T>
bool is_stable(const CMQuadruple<T>& q, const Field<T>& field) {
  q.validate();
  return invariant_span_dim(q.i, {q.X, q.Y}, field) == q.n();
}

template <class T>
std::vector<WordInvariant<T>> word_invariants(const CMQuadruple<T>& q, std::size_t max_len) {
  q.validate();
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  std::vector<WordInvariant<T>> out;
  std::vector<std::pair<std::string, Matrix<T>>> layer{{"", Matrix<T>::identity(q.n())}};
  out.push_back({{"jWi", ""}, (q.j * q.i).trace()});
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::pair<std::string, Matrix<T>>> next;
    for (const auto& [word, w] : layer) {
      next.emplace_back(word + "X", w * q.X);
      next.emplace_back(word + "Y", w * q.Y);
    }
    for (const auto& [word, w] : next) out.push_back({{"tr", word}, w.trace()});
    for (const auto& [word, w] : next) out.push_back({{"jWi", word}, (q.j * w * q.i).trace()});
    layer = std::move(next);
  }
  return out;
}

template <class T>
HilbertIdeal<T> hilbert_ideal(const CMQuadruple<T>& q, int degree_bound, const Field<T>& field) {
  q.validate();
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  if (q.r() != 1) throw PreconditionError("hilbert_ideal needs framing rank r = 1");
  if (!q.j.is_zero(field)) throw PreconditionError("hilbert_ideal needs j = 0");
  if (!commutator(q.X, q.Y).is_zero(field)) throw PreconditionError("hilbert_ideal needs XY = YX");
  if (!is_stable(q, field)) throw PreconditionError("hilbert_ideal needs stable data");

  HilbertIdeal<T> out;
  std::vector<Vector<T>> columns;
  // x^a i for each a, then Y-powers on top; commutativity makes order irrelevant.
  std::vector<Matrix<T>> x_powers{q.i};
  for (int a = 1; a <= degree_bound; ++a) x_powers.push_back(q.X * x_powers.back());
  for (int total = 0; total <= degree_bound; ++total) {
    for (int a = total; a >= 0; --a) {
      const int b = total - a;
      Matrix<T> v = x_powers[static_cast<std::size_t>(a)];
      for (int k = 0; k < b; ++k) v = q.Y * v;
      out.monomials.emplace_back(a, b);
      columns.push_back(v.column_vector(0));
    }
  }
  const Matrix<T> evaluation = from_columns(columns, q.n());
  const auto e = rref(evaluation, field);
  out.quotient_dim = e.rank();
  out.basis = kernel_basis(evaluation, field);
  return out;
}

std::string polynomial_string(const std::vector<std::pair<int, int>>& monomials, const Vector<Rational>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& c = coeffs[k];
    if (sgn(c) == 0) continue;
    const auto [a, b] = monomials[k];
    std::string mono;
    if (a > 0) mono += a == 1 ? "x" : "x^" + std::to_string(a);
    if (b > 0) mono += (mono.empty() ? "" : "*") + (b == 1 ? std::string("y") : "y^" + std::to_string(b));
    const bool negative = sgn(c) < 0;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    const Rational mag = abs(c);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

CMQuadruple<Rational> cm_from_diagonal(const std::vector<Rational>& xs, const std::vector<Rational>& is,
                                       const std::vector<Rational>& ydiag) {
  const std::size_t n = xs.size();
  if (is.size() != n || ydiag.size() != n) throw DimensionError("cm_from_diagonal: length mismatch");
  std::vector<Rational> js(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(is[k]) == 0) throw PreconditionError("cm_from_diagonal: framing entries must be nonzero");
    js[k] = 1 / is[k];
  }
  Matrix<Rational> y(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) {
        y(k, k) = ydiag[k];
        continue;
      }
      if (xs[k] == xs[l]) throw PreconditionError("cm_from_diagonal: diagonal of X must be distinct");
      y(k, l) = is[k] * js[l] / (xs[k] - xs[l]);
    }
  }
  return {Matrix<Rational>::diagonal(xs), std::move(y), Matrix<Rational>::column(is), Matrix<Rational>::row(js)};
}

CMQuadruple<Rational> sample_cm(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  RationalSampler rng(seed);
  std::vector<Rational> xs;
  while (xs.size() < n) {
    Rational x = rng.rational(9, 4);
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  std::vector<Rational> is(n), ydiag(n);
  for (auto& v : is) v = rng.nonzero_rational(4, 3);
  for (auto& v : ydiag) v = rng.rational(5, 3);
  return cm_from_diagonal(xs, is, ydiag);
}

Matrix<Complex> to_complex(const Matrix<Rational>& m) {
  std::vector<Complex> data;
  data.reserve(m.data().size());
  for (const auto& v : m.data()) data.emplace_back(v.get_d(), 0.0);
  return Matrix<Complex>(m.rows(), m.cols(), std::move(data));
}

CMQuadruple<Complex> to_complex(const CMQuadruple<Rational>& q) {
  return {to_complex(q.X), to_complex(q.Y), to_complex(q.i), to_complex(q.j)};
}

#define CMKIT_INSTANTIATE_ADHM(T)                                                                            \
  template struct CMQuadruple<T>;                                                                           \
  template Matrix<T> moment_std(const CMQuadruple<T>&);                                                     \
  template Matrix<T> cm_residual(const CMQuadruple<T>&);                                                    \
  template CMQuadruple<T> conjugate(const CMQuadruple<T>&, const Matrix<T>&, const Field<T>&);              \
  template std::size_t invariant_span_dim(const Matrix<T>&, const std::vector<Matrix<T>>&, const Field<T>&); \
  template bool is_stable(const CMQuadruple<T>&, const Field<T>&);                                          \
  template std::vector<WordInvariant<T>> word_invariants(const CMQuadruple<T>&, std::size_t);               \
  template HilbertIdeal<T> hilbert_ideal(const CMQuadruple<T>&, int, const Field<T>&);

CMKIT_INSTANTIATE_ADHM(Rational)
CMKIT_INSTANTIATE_ADHM(Complex)

}  // namespace cmkit
