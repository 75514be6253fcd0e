#include <doctest.h>

#include "cmkit/moduli.hpp"
#include "support.hpp"

using namespace cmkit;
using M = Matrix<Rational>;
using FS = FramedTorsionSheaf<Rational>;

namespace {

M companion(const Polynomial& p) {
  const std::size_t n = p.degree();
  M c(n, n);
  for (std::size_t k = 1; k < n; ++k) c(k, k - 1) = 1;
  for (std::size_t k = 0; k < n; ++k) c(k, n - 1) = -p.coeff(static_cast<int>(k)) / p.leading();
  return c;
}

const M J{{0, 1}, {0, 0}};
const M e1{{1}, {0}};
const M e2{{0}, {1}};

}  // namespace

TEST_CASE("support") {
  const auto diag = support(FS{M{{0, 0}, {0, 1}}, e1});
  REQUIRE(diag.size() == 2);
  CHECK(diag[0].factor.to_string() == "x - 1");
  CHECK(diag[1].factor.to_string() == "x");
  const auto jordan = support(FS{J, e1});
  REQUIRE(jordan.size() == 1);
  CHECK(jordan[0].multiplicity == 2);

  const Polynomial p = Polynomial({Rational(2), Rational(0), Rational(1)}) * Polynomial::linear(Rational(1, 3)) *
                       Polynomial::linear(Rational(1, 3));
  RationalSampler rng(6);
  const M g = rng.invertible(4);
  const auto f = support(FS{g * companion(p) * inverse(g), M(4, 1)});
  int total = 0;
  for (const auto& x : f) total += x.multiplicity * x.factor.degree();
  CHECK(total == 4);
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor == Polynomial::linear(Rational(1, 3)));
  CHECK(f[0].multiplicity == 2);
  CHECK(f[1].factor.to_string() == "x^2 + 2");
}

TEST_CASE("numeric support clusters eigenvalues") {
  const auto roots = support(FramedTorsionSheaf<Complex>{to_complex(M{{2, 1, 0}, {0, 2, 0}, {0, 0, -1}}), to_complex(M(3, 1))},
                             1e-4);
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0].value - Complex(-1, 0)) < 1e-9);
  CHECK(roots[1].multiplicity == 2);
  const auto rot = support(FramedTorsionSheaf<Complex>{to_complex(M{{0, -1}, {1, 0}}), to_complex(M(2, 1))}, 1e-6);
  REQUIRE(rot.size() == 2);
  CHECK(std::abs(rot[0].value.imag()) == doctest::Approx(1.0));
}

TEST_CASE("framing surjectivity") {
  CHECK(framing_surjective(FS{M{{5}}, M{{1}}}));
  CHECK(framing_surjective(FS{J, e2}));
  CHECK_FALSE(framing_surjective(FS{J, e1}));
  CHECK_FALSE(framing_surjective(FS{M{{0, 0}, {0, 1}}, e1}));
}

TEST_CASE("endomorphism algebras") {
  const auto flag = endomorphisms(FS{M{{0, 0}, {0, 1}}, M{{1}, {1}}});
  REQUIRE(flag.size() == 1);
  CHECK(flag[0].g == flag[0].s(0, 0) * M::identity(2));

  const auto split = endomorphisms(FS{M{{0, 0}, {0, 1}}, e1});
  CHECK(split.size() == 2);
  const Endomorphism<Rational> idem{M{{0}}, M{{0, 0}, {0, 1}}};
  CHECK(endomorphism_coordinates(split, idem).has_value());

  const auto jordan = endomorphisms(FS{J, e1});
  CHECK(jordan.size() == 2);
  CHECK(endomorphism_coordinates(jordan, {M{{1}}, M::identity(2)}).has_value());
  CHECK(endomorphism_coordinates(jordan, {M{{0}}, J}).has_value());

  // Closed under composition and contains the identity.
  RationalSampler rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = rng.integer(1, 3), r = rng.integer(1, 2);
    const FS fs{rng.matrix(n, n, 1, 1), rng.matrix(n, r, 1, 1)};
    const auto basis = endomorphisms(fs);
    CHECK(endomorphism_coordinates(basis, {M::identity(r), M::identity(n)}).has_value());
    for (const auto& a : basis)
      for (const auto& b : basis) CHECK(endomorphism_coordinates(basis, a * b).has_value());
  }
}

TEST_CASE("indecomposability") {
  CHECK(is_indecomposable(FS{J, e1}) == Indecomposability::indecomposable);
  const auto rep = indecomposability(FS{J, e1});
  CHECK(rep.end_dim == 2);
  CHECK(rep.radical_dim == 1);
  CHECK(is_indecomposable(FS{M{{0, 0}, {0, 1}}, e1}) == Indecomposability::decomposable);
  CHECK(is_indecomposable(FS{M{{Rational(7, 3)}}, M{{-2}}}) == Indecomposability::indecomposable);
  CHECK(is_indecomposable(FS{M::identity(2), e1}) == Indecomposability::decomposable);
  // With i = 0 the algebra is Q x Q[X] and X has no rational eigenvalue.
  CHECK(is_indecomposable(FS{M{{0, -1}, {1, 0}}, M(2, 1)}) == Indecomposability::inconclusive);
  CHECK(is_indecomposable(FS{M{{0, -1}, {1, 0}}, e1}) == Indecomposability::indecomposable);
  CHECK(std::string(to_string(Indecomposability::decomposable)) == "decomposable");
}

TEST_CASE("cm support check") {
  const auto flag = cm_support_check(FS{M{{0, 0}, {0, 1}}, M{{1}, {1}}});
  CHECK(flag.in_support);
  CHECK(flag.fiber_dim == 2u);
  CHECK_FALSE(cm_support_check(FS{M::identity(2), e1}).in_support);
  CHECK_FALSE(cm_support_check(FS{M::identity(2), e1}).fiber_dim);
  CHECK(cm_support_check(FS{J, e1}).in_support);
}

TEST_CASE("support claim on random split examples at n = 3") {
  RationalSampler rng(77);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    // Upper triangular X has split spectrum; conjugate to hide it.
    M X(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = r; c < 3; ++c) X(r, c) = Rational(rng.integer(-1, 1));
    const M g = rng.invertible(3);
    const FS fs{g * X * inverse(g), g * rng.matrix(3, 1, 1, 1)};
    const auto verdict = is_indecomposable(fs);
    REQUIRE(verdict != Indecomposability::inconclusive);
    CHECK((verdict == Indecomposability::indecomposable) == cm_support_check(fs).in_support);
    ++checked;
  }
  CHECK(checked == 40);
}
