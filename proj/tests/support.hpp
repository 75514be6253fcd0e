#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cmkit/adhm.hpp"
#include "cmkit/random.hpp"
#include "cmkit/weyl.hpp"

namespace testkit {

using cmkit::CMQuadruple;
using cmkit::Matrix;
using cmkit::Rational;

// A CM point with non-diagonal X: sample_cm moved by a random base change.
inline CMQuadruple<Rational> random_cm(std::size_t n, std::uint64_t seed) {
  cmkit::RationalSampler rng(seed ^ 0x9e3779b97f4a7c15ULL);
  return cmkit::conjugate(cmkit::sample_cm(n, seed), rng.invertible(n));
}

// Cells (a, b) of a partition given by column heights: cell (a, b) exists
// for b < heights[a]. heights must be weakly decreasing.
inline std::vector<std::pair<int, int>> staircase_cells(const std::vector<int>& heights) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t a = 0; a < heights.size(); ++a)
    for (int b = 0; b < heights[a]; ++b) cells.emplace_back(static_cast<int>(a), b);
  return cells;
}

// Multiplication by x and y on C[x,y]/I for the monomial ideal I of the
// partition, shifted to the point (s, t); i is the class of 1.
inline CMQuadruple<Rational> staircase(const std::vector<int>& heights, const Rational& s, const Rational& t) {
  const auto cells = staircase_cells(heights);
  const std::size_t n = cells.size();
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[cells[k]] = k;
  Matrix<Rational> X = s * Matrix<Rational>::identity(n);
  Matrix<Rational> Y = t * Matrix<Rational>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [a, b] = cells[k];
    if (auto it = index.find({a + 1, b}); it != index.end()) X(it->second, k) += 1;
    if (auto it = index.find({a, b + 1}); it != index.end()) Y(it->second, k) += 1;
  }
  Matrix<Rational> i(n, 1);
  i(index.at({0, 0}), 0) = 1;
  return {X, Y, i, Matrix<Rational>(1, n)};
}

inline Matrix<Rational> block_diag(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  Matrix<Rational> out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

// Random partition of m as weakly decreasing column heights.
inline std::vector<int> random_partition(int m, cmkit::RationalSampler& rng) {
  std::vector<int> parts;
  int left = m;
  int cap = m;
  while (left > 0) {
    const int p = static_cast<int>(rng.integer(1, std::min(left, cap)));
    parts.push_back(p);
    left -= p;
    cap = p;
  }
  return parts;
}

// Commuting stable (X, Y, i) with j = 0 and r = 1: a direct sum of shifted
// staircases at distinct points, in a random basis.
inline CMQuadruple<Rational> random_commuting_stable(std::size_t n, std::uint64_t seed) {
  cmkit::RationalSampler rng(seed);
  std::vector<std::pair<Rational, Rational>> points;
  CMQuadruple<Rational> acc;
  int left = static_cast<int>(n);
  while (left > 0) {
    const int m = static_cast<int>(rng.integer(1, left));
    left -= m;
    std::pair<Rational, Rational> pt;
    do {
      pt = {Rational(rng.integer(-3, 3)), Rational(rng.integer(-3, 3))};
    } while (std::find(points.begin(), points.end(), pt) != points.end());
    points.push_back(pt);
    auto block = staircase(random_partition(m, rng), pt.first, pt.second);
    if (acc.X.rows() == 0) {
      acc = block;
    } else {
      Matrix<Rational> i(acc.n() + block.n(), 1);
      for (std::size_t k = 0; k < acc.n(); ++k) i(k, 0) = acc.i(k, 0);
      for (std::size_t k = 0; k < block.n(); ++k) i(acc.n() + k, 0) = block.i(k, 0);
      acc = {block_diag(acc.X, block.X), block_diag(acc.Y, block.Y), i, Matrix<Rational>(1, acc.n() + block.n())};
    }
  }
  return cmkit::conjugate(acc, rng.invertible(n));
}

// Words in x and d with rational coefficients, normal-ordered by repeatedly
// rewriting "dx" to "xd" + "".
using WordSum = std::map<std::string, Rational>;

inline WordSum rewrite_normal(WordSum sum) {
  for (bool changed = true; changed;) {
    changed = false;
    WordSum next;
    for (const auto& [w, c] : sum) {
      const auto pos = w.find("dx");
      if (pos == std::string::npos) {
        next[w] += c;
        continue;
      }
      changed = true;
      next[w.substr(0, pos) + "xd" + w.substr(pos + 2)] += c;
      next[w.substr(0, pos) + w.substr(pos + 2)] += c;
    }
    sum.clear();
    for (auto& [w, c] : next)
      if (sgn(c) != 0) sum.emplace(w, c);
  }
  return sum;
}

inline WordSum to_words(const cmkit::WeylElement& u) {
  WordSum out;
  for (const auto& [m, c] : u.terms()) out[std::string(m.second, 'x') + std::string(m.first, 'd')] += c;
  return out;
}

inline cmkit::WeylElement from_words(const WordSum& sum) {
  cmkit::WeylElement out;
  for (const auto& [w, c] : sum) {
    const int a = static_cast<int>(std::count(w.begin(), w.end(), 'x'));
    out += cmkit::WeylElement::monomial(a, static_cast<int>(w.size()) - a, c);
  }
  return out;
}

inline cmkit::WeylElement oracle_mul(const cmkit::WeylElement& u, const cmkit::WeylElement& v) {
  WordSum prod;
  for (const auto& [wu, cu] : to_words(u))
    for (const auto& [wv, cv] : to_words(v)) prod[wu + wv] += cu * cv;
  return from_words(rewrite_normal(prod));
}

inline cmkit::WeylElement random_weyl(cmkit::RationalSampler& rng, int max_deg, int terms) {
  cmkit::WeylElement u;
  for (int k = 0; k < terms; ++k)
    u += cmkit::WeylElement::monomial(static_cast<int>(rng.integer(0, max_deg)), static_cast<int>(rng.integer(0, max_deg)),
                                      rng.nonzero_rational(4, 3));
  return u;
}

// det by cofactor expansion along the first row.
inline Rational det_oracle(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<Rational> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Rational term = m(0, c) * det_oracle(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

}  // namespace testkit
