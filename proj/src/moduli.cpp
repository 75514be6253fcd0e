#include "cmkit/moduli.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace cmkit {

template <class T>
void FramedTorsionSheaf<T>::validate() const {
  if (X.rows() == 0 || !X.is_square()) throw DimensionError("X must be a nonempty square matrix, got " + X.shape());
  if (i.rows() != X.rows() || i.cols() == 0)
    throw DimensionError("i must be " + std::to_string(X.rows()) + "xr with r >= 1, got " + i.shape());
}

Polynomial char_polynomial(const Matrix<Rational>& X) { return Polynomial(char_poly(X)); }

std::vector<Factor> support(const FramedTorsionSheaf<Rational>& fs) {
  fs.validate();
  return factor_rational(char_polynomial(fs.X));
}

std::vector<NumericRoot> support(const FramedTorsionSheaf<Complex>& fs, double cluster_radius) {
  fs.validate();
  const auto n = static_cast<Eigen::Index>(fs.n());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = fs.X(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration did not converge");

  std::vector<Complex> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(eig.begin(), eig.end(),
            [](const Complex& a, const Complex& b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  std::vector<NumericRoot> clusters;
  std::vector<Complex> sums;
  for (const auto& z : eig) {
    bool placed = false;
    for (std::size_t k = 0; k < clusters.size(); ++k) {
      if (std::abs(z - clusters[k].value) <= cluster_radius) {
        sums[k] += z;
        clusters[k].multiplicity += 1;
        clusters[k].value = sums[k] / static_cast<double>(clusters[k].multiplicity);
        placed = true;
        break;
      }
    }
    if (!placed) {
      clusters.push_back({z, 1});
      sums.push_back(z);
    }
  }
  return clusters;
}

template <class T>
bool framing_surjective(const FramedTorsionSheaf<T>& fs, const Field<T>& field) {
  fs.validate();
  return invariant_span_dim(fs.i, {fs.X}, field) == fs.n();
}

template <class T>
std::vector<Endomorphism<T>> endomorphisms(const FramedTorsionSheaf<T>& fs, const Field<T>& field) {
  fs.validate();
  const std::size_t n = fs.n(), r = fs.r();
  const auto s_index = [r](std::size_t p, std::size_t q) { return p * r + q; };
  const auto g_index = [n, r](std::size_t a, std::size_t b) { return r * r + a * n + b; };

  Matrix<T> system(n * n + n * r, r * r + n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t eq = a * n + b;  // (gX - Xg)_ab
      for (std::size_t c = 0; c < n; ++c) {
        system(eq, g_index(a, c)) += fs.X(c, b);
        system(eq, g_index(c, b)) -= fs.X(a, c);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t p = 0; p < r; ++p) {
      const std::size_t eq = n * n + a * r + p;  // (g i - i s)_ap
      for (std::size_t c = 0; c < n; ++c) system(eq, g_index(a, c)) += fs.i(c, p);
      for (std::size_t q = 0; q < r; ++q) system(eq, s_index(q, p)) -= fs.i(a, q);
    }
  }

  std::vector<Endomorphism<T>> basis;
  for (const auto& v : kernel_basis(system, field)) {
    Endomorphism<T> e{Matrix<T>(r, r), Matrix<T>(n, n)};
    for (std::size_t p = 0; p < r; ++p)
      for (std::size_t q = 0; q < r; ++q) e.s(p, q) = v[s_index(p, q)];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) e.g(a, b) = v[g_index(a, b)];
    basis.push_back(std::move(e));
  }
  return basis;
}

namespace {

template <class T>
Vector<T> flatten(const Endomorphism<T>& e) {
  Vector<T> v = e.s.data();
  v.insert(v.end(), e.g.data().begin(), e.g.data().end());
  return v;
}

}  // namespace

template <class T>
std::optional<Vector<T>> endomorphism_coordinates(const std::vector<Endomorphism<T>>& basis,
                                                  const Endomorphism<T>& e, const Field<T>& field) {
  std::vector<Vector<T>> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  const Vector<T> target = flatten(e);
  const auto solved = solve_affine(from_columns(cols, target.size()), target, field);
  if (!solved) return std::nullopt;
  return solved->particular;
}

const char* to_string(Indecomposability v) {
  switch (v) {
    case Indecomposability::indecomposable:
      return "indecomposable";
    case Indecomposability::decomposable:
      return "decomposable";
    case Indecomposability::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

IndecomposabilityReport indecomposability(const FramedTorsionSheaf<Rational>& fs) {
  const auto basis = endomorphisms(fs);
  const std::size_t m = basis.size();

  // Structure constants: e_k e_l = sum_p c[k][l][p] e_p.
  std::vector<std::vector<Vector<Rational>>> c(m, std::vector<Vector<Rational>>(m));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) {
      auto coords = endomorphism_coordinates(basis, basis[k] * basis[l]);
      if (!coords) throw std::logic_error("endomorphism space is not closed under composition");
      c[k][l] = std::move(*coords);
    }
  }
  // tr(L_{e_p}) = sum_l c[p][l][l], and the trace form is bilinear in the product.
  Vector<Rational> tau(m, Rational(0));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t l = 0; l < m; ++l) tau[p] += c[p][l][l];
  Matrix<Rational> form(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t p = 0; p < m; ++p) form(k, l) += c[k][l][p] * tau[p];

  IndecomposabilityReport report;
  report.end_dim = m;
  const std::size_t semisimple_dim = rank(form);
  report.radical_dim = m - semisimple_dim;
  report.spectrum_splits = splits_over_rationals(char_polynomial(fs.X));
  if (semisimple_dim == 1) {
    report.verdict = Indecomposability::indecomposable;
  } else if (report.spectrum_splits) {
    report.verdict = Indecomposability::decomposable;
  } else {
    report.verdict = Indecomposability::inconclusive;
  }
  return report;
}

template <class T>
SupportCheck cm_support_check(const FramedTorsionSheaf<T>& fs, const Field<T>& field) {
  fs.validate();
  const auto sol = solve_cm_fiber(fs.X, fs.i, field);
  if (!sol) return {false, std::nullopt};
  return {true, sol->dimension()};
}

#define CMKIT_INSTANTIATE_MODULI(T)                                                                          \
  template struct FramedTorsionSheaf<T>;                                                                    \
  template bool framing_surjective(const FramedTorsionSheaf<T>&, const Field<T>&);                          \
  template std::vector<Endomorphism<T>> endomorphisms(const FramedTorsionSheaf<T>&, const Field<T>&);       \
  template std::optional<Vector<T>> endomorphism_coordinates(const std::vector<Endomorphism<T>>&,           \
                                                             const Endomorphism<T>&, const Field<T>&);      \
  template SupportCheck cm_support_check(const FramedTorsionSheaf<T>&, const Field<T>&);

CMKIT_INSTANTIATE_MODULI(Rational)
CMKIT_INSTANTIATE_MODULI(Complex)

}  // namespace cmkit
