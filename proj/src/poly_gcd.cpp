// Multivariate GCD over Q(i)[s, z, t] by recursive primitive pseudo-remainder
// sequences. Laurent monomials are units, so inputs are first shifted to have
// zero minimal exponents.

#include <cstdint>
#include <map>
#include <optional>
#include <random>

#include "qclass/coeff.hpp"

namespace qclass {
namespace {

LaurentPoly strip_monomial(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Exponent mn = p.min_exps();
  for (auto& e : mn) e = -e;
  return p.shifted(mn);
}

LaurentPoly make_monic(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const GaussianRational& lc = p.leading().coef;
  return lc.is_one() ? p : p.scaled(lc.inverse());
}

int degree(const LaurentPoly& p, int v) {
  int d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.exps[v]);
  return d;
}

// Coefficients of p viewed as a polynomial in variable v.
std::map<int, LaurentPoly> split(const LaurentPoly& p, int v) {
  std::map<int, std::vector<LaurentPoly::Term>> parts;
  for (const auto& t : p.terms()) {
    LaurentPoly::Term c = t;
    c.exps[v] = 0;
    parts[t.exps[v]].push_back(std::move(c));
  }
  std::map<int, LaurentPoly> out;
  for (auto& [d, terms] : parts) out.emplace(d, LaurentPoly::from_terms(std::move(terms)));
  return out;
}

LaurentPoly coeff_of(const LaurentPoly& p, int v, int d) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : p.terms()) {
    if (t.exps[v] != d) continue;
    LaurentPoly::Term c = t;
    c.exps[v] = 0;
    terms.push_back(std::move(c));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

int top_var(const LaurentPoly& a, const LaurentPoly& b) {
  for (int v = kNumVars - 1; v >= 0; --v)
    if (a.uses_var(v) || b.uses_var(v)) return v;
  return -1;
}

LaurentPoly gcd_rec(LaurentPoly a, LaurentPoly b);

LaurentPoly content(const LaurentPoly& p, int v) {
  LaurentPoly g;
  for (const auto& [d, c] : split(p, v)) {
    g = g.is_zero() ? make_monic(strip_monomial(c)) : gcd_rec(g, c);
    if (g.is_constant()) return LaurentPoly(1);
  }
  return g;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = LaurentPoly::divide(a, b);
  if (!q) throw ArithmeticError("internal: inexact division in gcd");
  return *q;
}

// lc(b)^{deg a - deg b + 1} * a reduced modulo b, as a polynomial in v.
LaurentPoly pseudo_remainder(const LaurentPoly& a, const LaurentPoly& b, int v) {
  const int db = degree(b, v);
  const LaurentPoly lb = coeff_of(b, v, db);
  int budget = degree(a, v) - db + 1;
  LaurentPoly r = a;
  while (!r.is_zero() && degree(r, v) >= db) {
    const int dr = degree(r, v);
    LaurentPoly lr = coeff_of(r, v, dr);
    Exponent sh{};
    sh[v] = dr - db;
    r = lb * r - (lr * b).shifted(sh);
    --budget;
  }
  for (; budget > 0; --budget) r = lb * r;
  return r;
}

LaurentPoly power(const LaurentPoly& x, int k) {
  LaurentPoly r(1);
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

// Monic Euclid over Q(i) for polynomials in the single variable v.
LaurentPoly univariate_gcd(LaurentPoly a, LaurentPoly b, int v) {
  if (degree(a, v) < degree(b, v)) std::swap(a, b);
  b = make_monic(b);
  while (!b.is_zero()) {
    if (degree(b, v) == 0) return LaurentPoly(1);
    const int db = degree(b, v);
    LaurentPoly r = a;
    while (!r.is_zero() && degree(r, v) >= db) {
      const int dr = degree(r, v);
      LaurentPoly::Term lead = r.leading();
      Exponent sh{};
      sh[v] = dr - db;
      r -= b.shifted(sh).scaled(lead.coef);
    }
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

// Arithmetic modulo a prime p = 1 mod 4, where i maps to a square root of -1.
namespace modp {

constexpr std::uint64_t kP = 1000000009ULL;

std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return (a * b) % kP; }

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  a %= kP;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a) { return pow(a, kP - 2); }

std::uint64_t sqrt_minus_one() {
  for (std::uint64_t c = 2;; ++c) {
    std::uint64_t r = pow(c, (kP - 1) / 4);
    if (mul(r, r) == kP - 1) return r;
  }
}

std::optional<std::uint64_t> reduce(const mpq_class& x) {
  mpz_class n = x.get_num() % static_cast<unsigned long>(kP);
  mpz_class d = x.get_den() % static_cast<unsigned long>(kP);
  if (d == 0) return std::nullopt;
  if (n < 0) n += static_cast<unsigned long>(kP);
  return mul(n.get_ui(), inv(d.get_ui()));
}

std::optional<std::uint64_t> reduce(const GaussianRational& x) {
  static const std::uint64_t root = sqrt_minus_one();
  auto re = reduce(x.re());
  auto im = reduce(x.im());
  if (!re || !im) return std::nullopt;
  return (*re + mul(*im, root)) % kP;
}

// Univariate image in variable v at the given values of the other variables.
std::optional<std::vector<std::uint64_t>> image(const LaurentPoly& p, int v,
                                                const std::array<std::uint64_t, kNumVars>& at) {
  std::vector<std::uint64_t> out;
  for (const auto& t : p.terms()) {
    auto c = reduce(t.coef);
    if (!c) return std::nullopt;
    std::uint64_t val = *c;
    for (int w = 0; w < kNumVars; ++w)
      if (w != v && t.exps[w] != 0) val = mul(val, pow(at[w], t.exps[w]));
    const auto d = static_cast<std::size_t>(t.exps[v]);
    if (out.size() <= d) out.resize(d + 1, 0);
    out[d] = (out[d] + val) % kP;
  }
  return out;
}

void trim(std::vector<std::uint64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t lb_inv = inv(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t f = mul(a.back(), lb_inv);
      const std::size_t off = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[off + k] = (a[off + k] + kP - mul(f, b[k])) % kP;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

}  // namespace modp

// True when a modular image certifies that the stripped polynomials a and b
// have no common factor of positive degree.
bool certified_coprime(const LaurentPoly& a, const LaurentPoly& b) {
  static std::mt19937_64 rng(12345);
  std::array<std::uint64_t, kNumVars> at{};
  for (auto& x : at) x = 2 + rng() % (modp::kP - 3);
  for (int v = 0; v < kNumVars; ++v) {
    const int da = degree(a, v), db = degree(b, v);
    if (da == 0 || db == 0) continue;
    auto ia = modp::image(a, v, at);
    auto ib = modp::image(b, v, at);
    if (!ia || !ib) return false;
    if (static_cast<int>(ia->size()) != da + 1 || ia->back() == 0) return false;
    if (static_cast<int>(ib->size()) != db + 1 || ib->back() == 0) return false;
    if (modp::gcd_degree(*ia, *ib) != 0) return false;
  }
  return true;
}

LaurentPoly gcd_rec(LaurentPoly a, LaurentPoly b) {
  if (a.is_zero()) return make_monic(strip_monomial(b));
  if (b.is_zero()) return make_monic(strip_monomial(a));
  a = strip_monomial(a);
  b = strip_monomial(b);
  if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
  if (a == b) return make_monic(a);
  if (certified_coprime(a, b)) return LaurentPoly(1);

  const int v = top_var(a, b);
  if (degree(a, v) == 0) return gcd_rec(a, content(b, v));
  if (degree(b, v) == 0) return gcd_rec(content(a, v), b);

  bool univariate = true;
  for (int w = 0; w < kNumVars; ++w)
    if (w != v && (a.uses_var(w) || b.uses_var(w))) univariate = false;
  if (univariate) return univariate_gcd(std::move(a), std::move(b), v);

  LaurentPoly ca = content(a, v), cb = content(b, v);
  LaurentPoly gc = gcd_rec(ca, cb);
  LaurentPoly A = exact_div(a, ca), B = exact_div(b, cb);
  if (degree(A, v) < degree(B, v)) std::swap(A, B);

  // Subresultant remainder sequence: all divisions below are exact.
  LaurentPoly g(1), h(1);
  while (true) {
    const int d = degree(A, v) - degree(B, v);
    LaurentPoly R = pseudo_remainder(A, B, v);
    if (R.is_zero()) break;
    if (degree(R, v) == 0) {
      B = LaurentPoly(1);
      break;
    }
    A = std::move(B);
    B = exact_div(R, g * power(h, d));
    g = coeff_of(A, v, degree(A, v));
    if (d == 0) {
      // h unchanged
    } else {
      h = exact_div(power(g, d), power(h, d - 1));
    }
  }
  if (!B.is_constant()) B = exact_div(B, content(B, v));
  return make_monic(strip_monomial(gc * B));
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) { return gcd_rec(a, b); }

std::optional<LaurentPoly> poly_gcd_bounded(const LaurentPoly& a, const LaurentPoly& b) {
  int vars = 0;
  for (int v = 0; v < kNumVars; ++v)
    if (a.uses_var(v) || b.uses_var(v)) ++vars;
  if (vars <= 1) {
    if (a.size() + b.size() > kGcdTermLimit) return std::nullopt;
    return gcd_rec(a, b);
  }
  LaurentPoly sa = strip_monomial(a), sb = strip_monomial(b);
  if (!sa.is_zero() && !sb.is_zero() && certified_coprime(sa, sb)) return LaurentPoly(1);
  if (a.size() + b.size() > kMultivariateGcdTermLimit) return std::nullopt;
  return gcd_rec(a, b);
}

}  // namespace qclass
