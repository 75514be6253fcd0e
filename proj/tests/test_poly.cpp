#include <doctest.h>

#include "cmkit/poly.hpp"
#include "cmkit/random.hpp"

using namespace cmkit;

namespace {

Polynomial P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

Polynomial power(const Polynomial& p, int k) {
  Polynomial out = Polynomial::constant(1);
  for (int e = 0; e < k; ++e) out = out * p;
  return out;
}

Polynomial product(const std::vector<Factor>& fs) {
  Polynomial out = Polynomial::constant(1);
  for (const auto& f : fs) out = out * power(f.factor, f.multiplicity);
  return out;
}

}  // namespace

TEST_CASE("basic polynomial arithmetic") {
  const auto p = P({-1, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(p(Rational(3)) == 8);
  CHECK(p.to_string() == "x^2 - 1");
  const auto [q, r] = Polynomial::divmod(p, P({-1, 1}));
  CHECK(q == P({1, 1}));
  CHECK(r.is_zero());
  CHECK(Polynomial::gcd(p, P({1, 2, 1})) == P({1, 1}));
  CHECK(Polynomial({Rational(3), Rational(-1, 2), Rational(1)}).to_string() == "x^2 - 1/2*x + 3");
}

TEST_CASE("squarefree decomposition") {
  const auto f = power(P({-1, 1}), 3) * power(P({2, 0, 1}), 2) * P({5, 1});
  const auto sq = squarefree_decomposition(f);
  CHECK(product(sq) == f.monic());
  for (const auto& s : sq) CHECK(Polynomial::gcd(s.factor, s.factor.derivative()).degree() == 0);
}

TEST_CASE("factorization of known products") {
  const std::vector<Polynomial> irreducible{P({1, 0, 1}), P({-2, 0, 1}), P({-2, 0, 0, 1}), P({1, 0, 0, 0, 1}),
                                            P({-1, 2}), P({1, 1, 1}), P({3, 0, 1})};
  const auto f = power(irreducible[0], 2) * irreducible[1] * irreducible[2] * irreducible[3] *
                 power(irreducible[4], 3) * irreducible[6];
  const auto fs = factor_rational(f);
  CHECK(product(fs) == f.monic());
  CHECK(fs.size() == 6);
  for (const auto& x : fs) CHECK(x.factor.leading() == 1);
  CHECK_FALSE(splits_over_rationals(f));
  // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2) has no rational root but splits into quadratics.
  const auto sophie = factor_rational(P({4, 0, 0, 0, 1}));
  CHECK(sophie.size() == 2);
  CHECK(factor_rational(P({1, 0, 0, 0, 1})).size() == 1);
  // Swinnerton-Dyer style: x^4 - 10x^2 + 1 is irreducible but reducible mod every prime.
  CHECK(factor_rational(P({1, 0, -10, 0, 1})).size() == 1);
}

TEST_CASE("round trip over random products of linear and quadratic factors") {
  RationalSampler rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial f = Polynomial::constant(rng.nonzero_rational());
    const int k = static_cast<int>(rng.integer(1, 4));
    for (int m = 0; m < k; ++m) {
      if (rng.integer(0, 1) == 0) {
        f = f * power(Polynomial::linear(rng.rational()), static_cast<int>(rng.integer(1, 2)));
      } else {
        f = f * Polynomial({rng.rational(), rng.rational(), rng.nonzero_rational()});
      }
    }
    const auto fs = factor_rational(f);
    CHECK(product(fs) == f.monic());
    for (const auto& x : fs) CHECK(x.factor.degree() <= 2);
  }
}

TEST_CASE("rational roots") {
  const auto f = P({-1, 2}) * P({3, 1}) * P({1, 0, 1});
  const auto roots = rational_roots(f);
  CHECK(roots == std::vector<Rational>{Rational(-3), Rational(1, 2)});
  CHECK(splits_over_rationals(P({-1, 2}) * P({3, 1}) * P({3, 1})));
}
