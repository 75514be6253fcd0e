#include <doctest.h>

#include <algorithm>

#include "cmkit/adhm.hpp"
#include "support.hpp"

using namespace cmkit;
using M = Matrix<Rational>;
using Q = CMQuadruple<Rational>;

namespace {

Q flagship() { return {M{{0, 0}, {0, 1}}, M{{0, -1}, {1, 0}}, M{{1}, {1}}, M{{1, 1}}}; }

// f(X, Y) i for f given as coefficients over monomials x^a y^b.
M evaluate(const Q& q, const std::vector<std::pair<int, int>>& monomials, const Vector<Rational>& coeffs) {
  M acc(q.n(), 1);
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    M term = q.i;
    for (int e = 0; e < monomials[k].second; ++e) term = q.Y * term;
    for (int e = 0; e < monomials[k].first; ++e) term = q.X * term;
    acc += coeffs[k] * term;
  }
  return acc;
}

}  // namespace

TEST_CASE("moment maps on the worked examples") {
  const Q one{M{{0}}, M{{0}}, M{{1}}, M{{1}}};
  CHECK(moment_std(one) == M{{1}});
  CHECK(cm_residual(one) == M{{0}});
  const Q zero{M(2, 2), M(2, 2), M(2, 1), M(1, 2)};
  CHECK(moment_std(zero) == M(2, 2));
  CHECK(cm_residual(zero) == M::identity(2));
  CHECK(cm_residual(flagship()) == M(2, 2));
  Q neg = flagship();
  neg.j = M{{-1, -1}};
  CHECK(moment_std(neg) == -M::identity(2));
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(moment_std(Q{M(2, 2), M(3, 3), M(2, 1), M(1, 2)}), DimensionError);
  CHECK_THROWS_AS(moment_std(Q{M(2, 2), M(2, 2), M(2, 1), M(1, 3)}), DimensionError);
  CHECK_THROWS_AS(moment_std(Q{M(2, 2), M(2, 2), M(2, 0), M(0, 2)}), DimensionError);
}

TEST_CASE("conjugation") {
  const Q q = flagship();
  CHECK(conjugate(q, M::identity(2)) == q);
  CHECK(is_cm_point(conjugate(q, M{{1, 1}, {0, 1}})));
  CHECK_THROWS_AS(conjugate(q, M{{1, 1}, {1, 1}}), SingularMatrixError);
  RationalSampler rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng.integer(1, 4), r = rng.integer(1, 2);
    const Q p{rng.matrix(n, n), rng.matrix(n, n), rng.matrix(n, r), rng.matrix(r, n)};
    const M g = rng.invertible(n);
    CHECK(cm_residual(conjugate(p, g)) == g * cm_residual(p) * inverse(g));
  }
}

TEST_CASE("stability") {
  CHECK(is_stable(Q{M{{0}}, M{{0}}, M{{1}}, M{{0}}}));
  CHECK_FALSE(is_stable(Q{M(2, 2), M(2, 2), M{{1}, {0}}, M(1, 2)}));
  CHECK(is_stable(Q{M{{0, 1}, {0, 0}}, M(2, 2), M{{0}, {1}}, M(1, 2)}));
  CHECK(is_stable(flagship()));
  CHECK(invariant_span_dim(M{{1}, {0}, {0}}, {M{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}}) == 3);
}

TEST_CASE("word invariants") {
  const auto inv = word_invariants(flagship(), 2);
  const auto find = [&](const std::string& kind, const std::string& word) {
    auto it = std::find_if(inv.begin(), inv.end(),
                           [&](const auto& w) { return w.key.kind == kind && w.key.word == word; });
    REQUIRE(it != inv.end());
    return it->value;
  };
  CHECK(find("tr", "X") == 1);
  CHECK(find("tr", "Y") == 0);
  CHECK(find("jWi", "") == 2);
  // 2 + 4 traces and 1 + 2 + 4 framed words.
  CHECK(inv.size() == 13);
  const auto trivial = word_invariants(Q{M{{0}}, M{{0}}, M{{1}}, M{{1}}}, 3);
  for (const auto& w : trivial) CHECK(w.value == (w.key.kind == "jWi" && w.key.word.empty() ? 1 : 0));

  RationalSampler rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Q q = sample_cm(3, trial);
    const auto a = word_invariants(q, 3), b = word_invariants(conjugate(q, rng.invertible(3)), 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].value == b[k].value);
  }
  CHECK_THROWS_AS(word_invariants(flagship(), 0), std::invalid_argument);
}

TEST_CASE("hilbert ideal of the origin and of two points") {
  const auto origin = hilbert_ideal(Q{M{{0}}, M{{0}}, M{{1}}, M{{0}}}, 2);
  CHECK(origin.quotient_dim == 1);
  CHECK(origin.basis.size() == 5);

  const Q two{M{{0, 0}, {0, 1}}, M(2, 2), M{{1}, {1}}, M(1, 2)};
  const auto ideal = hilbert_ideal(two, 2);
  CHECK(ideal.quotient_dim == 2);
  std::vector<std::string> polys;
  for (const auto& v : ideal.basis) polys.push_back(polynomial_string(ideal.monomials, v));
  CHECK(std::find(polys.begin(), polys.end(), "y") != polys.end());
  CHECK(std::find(polys.begin(), polys.end(), "x^2 - x") != polys.end());
  for (const auto& v : ideal.basis) CHECK(evaluate(two, ideal.monomials, v) == M(2, 1));
}

TEST_CASE("hilbert ideal preconditions") {
  CHECK_THROWS_AS(hilbert_ideal(flagship(), 2), PreconditionError);
  CHECK_THROWS_AS(hilbert_ideal(Q{M(2, 2), M(2, 2), M{{1}, {0}}, M(1, 2)}, 2), PreconditionError);
  CHECK_THROWS_AS(hilbert_ideal(Q{M{{0}}, M{{0}}, M{{1}}, M{{1}}}, 2), PreconditionError);
}

TEST_CASE("hilbert ideal on random staircase data") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const Q q = testkit::random_commuting_stable(n, seed);
    REQUIRE(commutator(q.X, q.Y) == M(n, n));
    REQUIRE(is_stable(q));
    const auto ideal = hilbert_ideal(q, static_cast<int>(n));
    CHECK(ideal.quotient_dim == n);
    CHECK(ideal.monomials.size() == ideal.basis.size() + n);
    for (const auto& v : ideal.basis) CHECK(evaluate(q, ideal.monomials, v) == M(n, 1));
    // The quotient grows with d and is stable past n.
    CHECK(hilbert_ideal(q, static_cast<int>(n) + 1).quotient_dim == n);
    CHECK(hilbert_ideal(q, 1).quotient_dim <= ideal.quotient_dim);
  }
}

TEST_CASE("sample_cm") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Q q = sample_cm(n, 42);
    CHECK(cm_residual(q) == M(n, n));
    CHECK((q.j * q.i).trace() == Rational(n));
  }
  CHECK(sample_cm(4, 7) == sample_cm(4, 7));
  CHECK_FALSE(sample_cm(4, 7) == sample_cm(4, 8));
  const Q d = cm_from_diagonal({Rational(0), Rational(1)}, {Rational(1), Rational(1)}, {Rational(0), Rational(0)});
  CHECK(d == flagship());
}

TEST_CASE("complex mode") {
  const auto q = to_complex(flagship());
  CHECK(is_cm_point(q));
  auto p = q;
  p.X(0, 0) += Complex(1e-12, 0);
  CHECK(is_cm_point(p));
  Field<Complex> strict;
  strict.tolerance = 1e-15;
  CHECK_FALSE(is_cm_point(p, strict));
}
