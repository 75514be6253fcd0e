#pragma once

#include <cstdint>
#include <random>

#include "cmkit/matrix.hpp"

namespace cmkit {

/// Deterministic source of small rationals. Only raw mt19937_64 output is
/// used (no std distributions), so streams are identical across platforms.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  /// p/q with |p| <= max_num and 1 <= q <= max_den.
  Rational rational(long max_num = 5, long max_den = 3) {
    Rational v(integer(-max_num, max_num), static_cast<unsigned long>(integer(1, max_den)));
    v.canonicalize();
    return v;
  }

  Rational nonzero_rational(long max_num = 5, long max_den = 3) {
    for (;;) {
      Rational v = rational(max_num, max_den);
      if (sgn(v) != 0) return v;
    }
  }

  Matrix<Rational> matrix(std::size_t rows, std::size_t cols, long max_num = 5, long max_den = 3) {
    Matrix<Rational> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(max_num, max_den);
    return m;
  }

  /// Unit lower times unit upper triangular: always invertible.
  Matrix<Rational> invertible(std::size_t n, long max_num = 3) {
    Matrix<Rational> lower = Matrix<Rational>::identity(n);
    Matrix<Rational> upper = Matrix<Rational>::identity(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < r; ++c) lower(r, c) = Rational(integer(-max_num, max_num));
      for (std::size_t c = r + 1; c < n; ++c) upper(r, c) = Rational(integer(-max_num, max_num));
    }
    return lower * upper;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cmkit
