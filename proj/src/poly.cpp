#include "cmkit/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmkit {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coeffs_;
  const Rational lc = leading();
  for (auto& v : c) v /= lc;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(c));
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational& lc = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + b.degree())] / lc;
    quo[static_cast<std::size_t>(k)] = q;
    if (sgn(q) == 0) continue;
    for (int m = 0; m <= b.degree(); ++m)
      rem[static_cast<std::size_t>(k + m)] -= q * b.coeffs_[static_cast<std::size_t>(m)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (!unit) out += mag.get_str() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::vector<Factor> squarefree_decomposition(const Polynomial& p) {
  std::vector<Factor> out;
  if (p.degree() < 1) return out;
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  const Polynomial a0 = Polynomial::gcd(f, df);
  Polynomial b = Polynomial::divmod(f, a0).first;
  Polynomial c = Polynomial::divmod(df, a0).first;
  Polynomial d = c - b.derivative();
  for (int k = 1; b.degree() > 0; ++k) {
    const Polynomial a = Polynomial::gcd(b, d);
    b = Polynomial::divmod(b, a).first;
    c = Polynomial::divmod(d, a).first;
    d = c - b.derivative();
    if (a.degree() > 0) out.push_back({a.monic(), k});
  }
  return out;
}

namespace {

// Integer and modular polynomials, coefficients ascending.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

mpz_class mod(const mpz_class& a, const mpz_class& p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return r;
}

ZPoly reduce(const ZPoly& f, const mpz_class& p) {
  ZPoly out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = mod(f[k], p);
  ztrim(out);
  return out;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& p) {
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::logic_error("non-invertible leading coefficient modulo p");
  return inv;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const mpz_class& p) {
  ZPoly out(std::max(a.size(), b.size()), mpz_class(0));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  return reduce(out, p);
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const mpz_class& p) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return reduce(out, p);
}

std::pair<ZPoly, ZPoly> zp_divmod(const ZPoly& a, const ZPoly& b, const mpz_class& p) {
  ZPoly rem = a;
  if (zdeg(a) < zdeg(b)) return {ZPoly{}, rem};
  const mpz_class inv = inverse_mod(b.back(), p);
  ZPoly quo(static_cast<std::size_t>(zdeg(a) - zdeg(b) + 1), mpz_class(0));
  for (int k = zdeg(a) - zdeg(b); k >= 0; --k) {
    const mpz_class q = mod(rem[static_cast<std::size_t>(k + zdeg(b))] * inv, p);
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int m = 0; m <= zdeg(b); ++m) {
      auto& slot = rem[static_cast<std::size_t>(k + m)];
      slot = mod(slot - q * b[static_cast<std::size_t>(m)], p);
    }
  }
  ztrim(quo);
  ztrim(rem);
  return {quo, rem};
}

ZPoly zp_monic(const ZPoly& f, const mpz_class& p) {
  if (f.empty()) return f;
  const mpz_class inv = inverse_mod(f.back(), p);
  ZPoly out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = mod(f[k] * inv, p);
  return out;
}

ZPoly zp_gcd(ZPoly a, ZPoly b, const mpz_class& p) {
  while (!b.empty()) {
    ZPoly r = zp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(a, p);
}

ZPoly zp_powmod(ZPoly base, mpz_class e, const ZPoly& f, const mpz_class& p) {
  ZPoly acc{mpz_class(1)};
  base = zp_divmod(base, f, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = zp_divmod(zp_mul(acc, base, p), f, p).second;
    e >>= 1;
    if (e > 0) base = zp_divmod(zp_mul(base, base, p), f, p).second;
  }
  return acc;
}

ZPoly zp_derivative(const ZPoly& f, const mpz_class& p) {
  if (f.size() < 2) return {};
  ZPoly out(f.size() - 1);
  for (std::size_t k = 1; k < f.size(); ++k) out[k - 1] = f[k] * static_cast<unsigned long>(k);
  return reduce(out, p);
}

// Distinct-degree factorization of a monic squarefree f mod p:
// pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<ZPoly, int>> distinct_degree(ZPoly f, const mpz_class& p) {
  std::vector<std::pair<ZPoly, int>> out;
  const ZPoly x{mpz_class(0), mpz_class(1)};
  ZPoly h = x;
  for (int d = 1; 2 * d <= zdeg(f); ++d) {
    h = zp_powmod(h, p, f, p);
    ZPoly g = zp_gcd(zp_sub(h, x, p), f, p);
    if (zdeg(g) > 0) {
      out.emplace_back(g, d);
      f = zp_divmod(f, g, p).first;
      h = zp_divmod(h, f, p).second;
    }
  }
  if (zdeg(f) > 0) out.emplace_back(f, zdeg(f));
  return out;
}

// Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles.
void equal_degree(const ZPoly& g, int d, const mpz_class& p, gmp_randclass& rng, std::vector<ZPoly>& out) {
  if (zdeg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  const mpz_class e = (pd - 1) / 2;
  for (;;) {
    ZPoly a(static_cast<std::size_t>(zdeg(g)));
    for (auto& c : a) c = rng.get_z_range(p);
    ztrim(a);
    if (zdeg(a) < 1) continue;
    ZPoly b = zp_powmod(a, e, g, p);
    b = zp_sub(b, ZPoly{mpz_class(1)}, p);
    ZPoly c = zp_gcd(b, g, p);
    if (zdeg(c) > 0 && zdeg(c) < zdeg(g)) {
      equal_degree(c, d, p, rng, out);
      equal_degree(zp_divmod(g, c, p).first, d, p, rng, out);
      return;
    }
  }
}

mpz_class symmetric(const mpz_class& a, const mpz_class& p) {
  mpz_class r = mod(a, p);
  if (2 * r > p) r -= p;
  return r;
}

mpz_class content(const ZPoly& f) {
  mpz_class g(0);
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(ZPoly f) {
  const mpz_class g = content(f);
  if (g == 0) return f;
  for (auto& c : f) c /= g;
  if (f.back() < 0)
    for (auto& c : f) c = -c;
  return f;
}

// Exact division over Z; false if g does not divide f.
bool zdivides(const ZPoly& f, const ZPoly& g, ZPoly& quotient) {
  ZPoly rem = f;
  if (zdeg(f) < zdeg(g)) return false;
  quotient.assign(static_cast<std::size_t>(zdeg(f) - zdeg(g) + 1), mpz_class(0));
  for (int k = zdeg(f) - zdeg(g); k >= 0; --k) {
    const mpz_class& top = rem[static_cast<std::size_t>(k + zdeg(g))];
    if (!mpz_divisible_p(top.get_mpz_t(), g.back().get_mpz_t())) return false;
    const mpz_class q = top / g.back();
    quotient[static_cast<std::size_t>(k)] = q;
    for (int m = 0; m <= zdeg(g); ++m) rem[static_cast<std::size_t>(k + m)] -= q * g[static_cast<std::size_t>(m)];
  }
  ztrim(rem);
  return rem.empty();
}

// Zassenhaus factorization of a primitive squarefree f in Z[x] using one prime
// large enough that lifting is unnecessary.
std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f) {
  if (zdeg(f) <= 1) return {f};

  mpz_class norm2(0);
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(zdeg(f)));
  bound *= 2 * abs(f.back());

  mpz_class p;
  mpz_nextprime(p.get_mpz_t(), bound.get_mpz_t());
  for (;;) {
    if (mod(f.back(), p) != 0) {
      const ZPoly fp = reduce(f, p);
      if (zdeg(zp_gcd(fp, zp_derivative(fp, p), p)) == 0) break;
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed);
  std::vector<ZPoly> modular;
  for (const auto& [g, d] : distinct_degree(zp_monic(reduce(f, p), p), p)) equal_degree(g, d, p, rng, modular);

  std::vector<ZPoly> out;
  ZPoly rest = f;
  std::vector<ZPoly> pool = modular;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
    do {
      ZPoly candidate{rest.back()};
      for (std::size_t k = 0; k < pool.size(); ++k)
        if (pick[k]) candidate = zp_mul(candidate, pool[k], p);
      for (auto& c : candidate) c = symmetric(c, p);
      ztrim(candidate);
      candidate = primitive_part(candidate);
      ZPoly quotient;
      if (zdivides(rest, candidate, quotient)) {
        out.push_back(candidate);
        rest = quotient;
        std::vector<ZPoly> remaining;
        for (std::size_t k = 0; k < pool.size(); ++k)
          if (!pick[k]) remaining.push_back(pool[k]);
        pool = std::move(remaining);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++size;
  }
  if (zdeg(rest) > 0) out.push_back(primitive_part(rest));
  return out;
}

ZPoly to_primitive_integer(const Polynomial& p) {
  mpz_class denom_lcm(1);
  for (const auto& c : p.coeffs()) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
  ZPoly f;
  for (const auto& c : p.coeffs()) f.push_back(c.get_num() * (denom_lcm / c.get_den()));
  return primitive_part(f);
}

Polynomial to_monic_rational(const ZPoly& f) {
  std::vector<Rational> c;
  for (const auto& v : f) c.emplace_back(v);
  return Polynomial(std::move(c)).monic();
}

}  // namespace

std::vector<Factor> factor_rational(const Polynomial& p) {
  std::vector<Factor> out;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (const auto& g : factor_squarefree_integer(to_primitive_integer(part)))
      out.push_back({to_monic_rational(g), mult});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    const auto& ca = a.factor.coeffs();
    const auto& cb = b.factor.coeffs();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
  });
  return out;
}

bool splits_over_rationals(const Polynomial& p) {
  for (const auto& f : factor_rational(p))
    if (f.factor.degree() > 1) return false;
  return true;
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> roots;
  for (const auto& f : factor_rational(p))
    if (f.factor.degree() == 1) roots.push_back(-f.factor.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cmkit
