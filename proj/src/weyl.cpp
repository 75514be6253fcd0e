#include "cmkit/weyl.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <vector>

#include "cmkit/linalg.hpp"

namespace cmkit {

namespace {

std::string monomial_string(int a, int b) {
  std::string s;
  if (a > 0) s += a == 1 ? "x" : "x^" + std::to_string(a);
  if (b != 0) {
    if (!s.empty()) s += "*";
    s += b == 1 ? "d" : "d^" + std::to_string(b);
  }
  return s;
}

std::string terms_string(const WeylTerms& terms) {
  if (terms.empty()) return "0";
  std::string out;
  // Highest d-degree first, then highest x-degree.
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = sgn(c) < 0;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    const Rational mag = abs(c);
    const std::string mono = monomial_string(m.second, m.first);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

WeylMonomial key(int a, int b) { return {b, a}; }

void accumulate(WeylTerms& terms, const WeylMonomial& k, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

}  // namespace

Rational leibniz_coefficient(int b, int c, int k) {
  if (k < 0 || k > c) return Rational(0);
  // binom(b, k) * c! / (c - k)!, binom generalized to negative b.
  Rational coef(1);
  for (int m = 1; m <= k; ++m) {
    coef *= Rational(static_cast<long>(b - m + 1)) * static_cast<long>(c - m + 1);
    coef /= static_cast<long>(m);
  }
  return coef;
}

// ---------------------------------------------------------------- Weyl

WeylElement WeylElement::monomial(int a, int b, const Rational& c) {
  if (a < 0 || b < 0) throw std::invalid_argument("Weyl monomials need nonnegative exponents");
  WeylElement u;
  u.add_term(key(a, b), c);
  return u;
}

void WeylElement::add_term(const WeylMonomial& m, const Rational& c) { accumulate(terms_, m, c); }

Rational WeylElement::coeff(int a, int b) const {
  auto it = terms_.find(key(a, b));
  return it == terms_.end() ? Rational(0) : it->second;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylElement operator*(const Rational& s, const WeylElement& u) {
  WeylElement out;
  for (const auto& [m, c] : u.terms_) out.add_term(m, s * c);
  return out;
}

WeylElement operator*(const WeylElement& u, const WeylElement& v) { return weyl_mul(u, v); }

WeylElement weyl_mul(const WeylElement& u, const WeylElement& v) {
  WeylElement out;
  for (const auto& [mu, cu] : u.terms_) {
    const int a = mu.second, b = mu.first;
    for (const auto& [mv, cv] : v.terms_) {
      const int c = mv.second, d = mv.first;
      for (int k = 0; k <= std::min(b, c); ++k)
        out.add_term(key(a + c - k, b + d - k), cu * cv * leibniz_coefficient(b, c, k));
    }
  }
  return out;
}

int order(const WeylElement& u) {
  if (u.is_zero()) throw std::domain_error("the zero element has no order");
  return u.terms().rbegin()->first.first;
}

std::string WeylElement::to_string() const { return terms_string(terms_); }

// ---------------------------------------------------------------- microlocal

MicrolocalElement::MicrolocalElement(int top, int bottom) : top_(top), bottom_(bottom) {
  if (top < -bottom) throw std::invalid_argument("empty cutoff window");
}

MicrolocalElement MicrolocalElement::monomial(int a, int b, const Rational& c, int top, int bottom) {
  if (a < 0) throw std::invalid_argument("negative x-degree");
  MicrolocalElement u(top, bottom);
  if (b > top) throw CutoffError("monomial d-degree " + std::to_string(b) + " exceeds cutoff " + std::to_string(top));
  if (b < -bottom) {
    u.exact_from_ = -bottom;
    return u;
  }
  u.add_term(key(a, b), c);
  return u;
}

MicrolocalElement MicrolocalElement::embed(const WeylElement& w, int top, int bottom) {
  MicrolocalElement u(top, bottom);
  for (const auto& [m, c] : w.terms()) {
    if (m.first > top) throw CutoffError("Weyl element order exceeds cutoff " + std::to_string(top));
    if (m.first < -bottom) {
      u.exact_from_ = -bottom;
      continue;
    }
    u.add_term(m, c);
  }
  return u;
}

void MicrolocalElement::add_term(const WeylMonomial& m, const Rational& c) { accumulate(terms_, m, c); }

Rational MicrolocalElement::coeff(int a, int b) const {
  auto it = terms_.find(key(a, b));
  return it == terms_.end() ? Rational(0) : it->second;
}

void MicrolocalElement::check_compatible(const MicrolocalElement& o) const {
  if (top_ != o.top_ || bottom_ != o.bottom_) throw std::invalid_argument("microlocal cutoffs differ");
}

std::optional<int> MicrolocalElement::highest_possible() const {
  std::optional<int> hi;
  if (!terms_.empty()) hi = terms_.rbegin()->first.first;
  if (exact_from_) hi = std::max(hi.value_or(*exact_from_ - 1), *exact_from_ - 1);
  return hi;
}

MicrolocalElement MicrolocalElement::truncated_below(int degree) const {
  MicrolocalElement out(top_, bottom_);
  out.exact_from_ = std::max(degree, exact_from_.value_or(degree));
  for (const auto& [m, c] : terms_)
    if (m.first >= *out.exact_from_) out.terms_.emplace(m, c);
  return out;
}

MicrolocalElement& MicrolocalElement::operator+=(const MicrolocalElement& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  if (o.exact_from_ || exact_from_) *this = truncated_below(std::max(exact_from_.value_or(INT_MIN), o.exact_from_.value_or(INT_MIN)));
  return *this;
}

MicrolocalElement& MicrolocalElement::operator-=(const MicrolocalElement& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  if (o.exact_from_ || exact_from_) *this = truncated_below(std::max(exact_from_.value_or(INT_MIN), o.exact_from_.value_or(INT_MIN)));
  return *this;
}

MicrolocalElement micro_mul(const MicrolocalElement& u, const MicrolocalElement& v) {
  u.check_compatible(v);
  MicrolocalElement out(u.top_, u.bottom_);
  bool dropped = false;
  for (const auto& [mu, cu] : u.terms_) {
    const int a = mu.second, b = mu.first;
    for (const auto& [mv, cv] : v.terms_) {
      const int c = mv.second, d = mv.first;
      if (b + d > out.top_) {
        throw CutoffError("product reaches d-degree " + std::to_string(b + d) + " above cutoff " +
                          std::to_string(out.top_));
      }
      const int kmax = b >= 0 ? std::min(b, c) : c;
      for (int k = 0; k <= kmax; ++k) {
        if (b + d - k < -out.bottom_) {
          dropped = true;
          break;
        }
        out.add_term(key(a + c - k, b + d - k), cu * cv * leibniz_coefficient(b, c, k));
      }
    }
  }

  // Lost low-order information in a factor contaminates the product up to
  // (lost degree) + (highest degree of the other factor).
  std::optional<int> exact;
  if (dropped) exact = -out.bottom_;
  const auto raise = [&exact](int degree) { exact = std::max(exact.value_or(degree), degree); };
  if (u.exact_from_) {
    if (auto hv = v.highest_possible()) raise(*u.exact_from_ + *hv);
  }
  if (v.exact_from_) {
    if (auto hu = u.highest_possible()) raise(*v.exact_from_ + *hu);
  }
  if (exact && *exact > out.top_) throw CutoffError("no coefficient of the product is known inside the cutoff window");
  if (exact) return out.truncated_below(std::max(*exact, -out.bottom_));
  return out;
}

WeylElement MicrolocalElement::to_weyl() const {
  if (truncated()) throw std::domain_error("truncated microlocal element has no Weyl image");
  WeylElement out;
  for (const auto& [m, c] : terms_) {
    if (m.first < 0) throw std::domain_error("negative d-degree term has no Weyl image");
    out += WeylElement::monomial(m.second, m.first, c);
  }
  return out;
}

std::string MicrolocalElement::to_string() const {
  std::string s = terms_string(terms_);
  if (exact_from_) s += " + O(d^" + std::to_string(*exact_from_ - 1) + ")";
  return s;
}

// ---------------------------------------------------------------- Cech

std::pair<int, int> cech_window_dims(int twist, int window, int xdeg) {
  const int top = window, bottom = window;
  std::vector<WeylMonomial> codomain;
  for (int b = -bottom; b <= top; ++b)
    for (int a = 0; a <= xdeg; ++a) codomain.emplace_back(a, b);
  const auto row_of = [&](int a, int b) { return static_cast<std::size_t>((b + bottom) * (xdeg + 1) + a); };

  // Domain basis x^a d^b of D (b >= 0) followed by E^twist (b <= twist).
  std::vector<MicrolocalElement> images;
  for (int b = 0; b <= top; ++b)
    for (int a = 0; a <= xdeg; ++a)
      images.push_back(micro_mul(MicrolocalElement::monomial(a, 0, Rational(1), top, bottom),
                                 MicrolocalElement::monomial(0, b, Rational(1), top, bottom)));
  for (int b = -bottom; b <= std::min(twist, top); ++b)
    for (int a = 0; a <= xdeg; ++a)
      images.push_back(MicrolocalElement(top, bottom) -
                       micro_mul(MicrolocalElement::monomial(a, 0, Rational(1), top, bottom),
                                 MicrolocalElement::monomial(0, b, Rational(1), top, bottom)));

  Matrix<Rational> map(codomain.size(), images.size());
  for (std::size_t col = 0; col < images.size(); ++col)
    for (const auto& [m, c] : images[col].terms()) map(row_of(m.second, m.first), col) = c;

  const auto r = static_cast<int>(rank(map));
  return {static_cast<int>(map.cols()) - r, static_cast<int>(map.rows()) - r};
}

CechRanks cech_graded_ranks(int twist, int cutoff) {
  if (cutoff < std::abs(twist) + 2) {
    throw std::invalid_argument("cutoff " + std::to_string(cutoff) + " is too small to certify twist " +
                                std::to_string(twist) + " (need at least " + std::to_string(std::abs(twist) + 2) +
                                ")");
  }
  // Module rank over Q[x] = growth of dimension per extra x-degree.
  const auto module_ranks = [twist](int window) {
    constexpr int xdeg = 1;
    const auto [k0, c0] = cech_window_dims(twist, window, xdeg);
    const auto [k1, c1] = cech_window_dims(twist, window, xdeg + 1);
    return std::pair{k1 - k0, c1 - c0};
  };
  const auto coarse = module_ranks(cutoff - 1);
  const auto fine = module_ranks(cutoff);
  return {twist, fine.first, fine.second, coarse == fine};
}

}  // namespace cmkit
