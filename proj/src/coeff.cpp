#include "qclass/coeff.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace qclass {

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero Gaussian rational");
  if (sgn(im_) == 0) return {1 / re_, 0};
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "*i";
  }
  std::string im = im_ == 1 ? "i" : (im_ == -1 ? "-i" : im_.get_str() + "*i");
  if (sgn(im_) > 0) im = "+" + im;
  return "(" + re_.get_str() + im + ")";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::inverse() const {
  Monomial r;
  r.unit = (4 - unit) % 4;
  for (int v = 0; v < kNumVars; ++v) r.exps[v] = -exps[v];
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  r.unit = ((unit * k) % 4 + 4) % 4;
  for (int v = 0; v < kNumVars; ++v) r.exps[v] = exps[v] * k;
  return r;
}

bool Monomial::is_one() const {
  if (unit != 0) return false;
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

GaussianRational Monomial::unit_value() const {
  switch (unit) {
    case 0: return 1;
    case 1: return GaussianRational::imag_unit();
    case 2: return -1;
    default: return -GaussianRational::imag_unit();
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.unit = (a.unit + b.unit) % 4;
  for (int v = 0; v < kNumVars; ++v) r.exps[v] = a.exps[v] + b.exps[v];
  return r;
}

namespace {

const char* var_name(int v) {
  static const char* names[kNumVars] = {"s", "z1", "z2", "z3", "z4", "t"};
  return names[v];
}

std::string exps_str(const Exponent& e) {
  std::string out;
  for (int v = 0; v < kNumVars; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(v);
    if (e[v] != 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

}  // namespace

std::string Monomial::str() const {
  static const char* units[4] = {"", "i", "-", "-i"};
  std::string body = exps_str(exps);
  if (body.empty()) {
    static const char* bare[4] = {"1", "i", "-1", "-i"};
    return bare[unit];
  }
  std::string u = units[unit];
  if (unit == 1 || unit == 3) u += "*";
  return u + body;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({Exponent{}, GaussianRational(c)});
}

LaurentPoly::LaurentPoly(const GaussianRational& c) {
  if (!c.is_zero()) terms_.push_back({Exponent{}, c});
}

LaurentPoly::LaurentPoly(const Monomial& m) { terms_.push_back({m.exps, m.unit_value()}); }

LaurentPoly::LaurentPoly(const Monomial& m, const GaussianRational& c) {
  if (!c.is_zero()) terms_.push_back({m.exps, m.unit_value() * c});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exps < b.exps; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Exponent{});
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exps == Exponent{} && terms_[0].coef.is_one();
}

Exponent LaurentPoly::min_exps() const {
  Exponent r{};
  if (terms_.empty()) return r;
  r = terms_[0].exps;
  for (const auto& t : terms_)
    for (int v = 0; v < kNumVars; ++v) r[v] = std::min(r[v], t.exps[v]);
  return r;
}

Exponent LaurentPoly::max_exps() const {
  Exponent r{};
  if (terms_.empty()) return r;
  r = terms_[0].exps;
  for (const auto& t : terms_)
    for (int v = 0; v < kNumVars; ++v) r[v] = std::max(r[v], t.exps[v]);
  return r;
}

bool LaurentPoly::uses_var(int v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.exps[v] != 0; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

template <class Combine>
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b,
                                           Combine sign_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exps < b[j].exps)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exps < a[i].exps) {
      out.push_back({b[j].exps, sign_b(b[j].coef)});
      ++j;
    } else {
      GaussianRational c = a[i].coef + sign_b(b[j].coef);
      if (!c.is_zero()) out.push_back({a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, [](const GaussianRational& c) { return c; });
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const GaussianRational& c) { return -c; });
  return *this;
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  LaurentPoly r = *this;
  if (c.is_one()) return r;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_)
    for (int v = 0; v < kNumVars; ++v) t.exps[v] += e[v];
  return r;  // a uniform shift preserves the lexicographic order
}

LaurentPoly LaurentPoly::times(const Monomial& m) const {
  return shifted(m.exps).scaled(m.unit_value());
}

namespace {

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const {
    std::size_t h = 0;
    for (int x : e) h = h * 1000003u + static_cast<std::size_t>(x + 0x9e3779b9);
    return h;
  }
};

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].exps == Exponent{}) return b.scaled(a.terms_[0].coef);
  if (b.size() == 1 && b.terms_[0].exps == Exponent{}) return a.scaled(b.terms_[0].coef);
  if (a.size() == 1) return b.shifted(a.terms_[0].exps).scaled(a.terms_[0].coef);
  if (b.size() == 1) return a.shifted(b.terms_[0].exps).scaled(b.terms_[0].coef);

  std::unordered_map<Exponent, GaussianRational, ExponentHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      Exponent e;
      for (int v = 0; v < kNumVars; ++v) e[v] = x.exps[v] + y.exps[v];
      acc[e] += x.coef * y.coef;
    }
  }
  LaurentPoly r;
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({e, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const LaurentPoly::Term& p, const LaurentPoly::Term& q) { return p.exps < q.exps; });
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

std::optional<LaurentPoly> LaurentPoly::divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.is_zero()) return LaurentPoly{};
  if (b.size() == 1) {
    Exponent neg;
    for (int v = 0; v < kNumVars; ++v) neg[v] = -b.terms_[0].exps[v];
    return a.shifted(neg).scaled(b.terms_[0].coef.inverse());
  }
  // Every quotient term lies in the box [min a - min b, max a - max b].
  const Exponent amin = a.min_exps(), amax = a.max_exps();
  const Exponent bmin = b.min_exps(), bmax = b.max_exps();
  Exponent lo, hi;
  for (int v = 0; v < kNumVars; ++v) {
    lo[v] = amin[v] - bmin[v];
    hi[v] = amax[v] - bmax[v];
    if (lo[v] > hi[v]) return std::nullopt;
  }
  const Term& lb = b.leading();
  const GaussianRational lb_inv = lb.coef.inverse();
  LaurentPoly rem = a;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    Term t;
    for (int v = 0; v < kNumVars; ++v) {
      t.exps[v] = lr.exps[v] - lb.exps[v];
      if (t.exps[v] < lo[v] || t.exps[v] > hi[v]) return std::nullopt;
    }
    t.coef = lr.coef * lb_inv;
    rem -= b.shifted(t.exps).scaled(t.coef);
    quot.push_back(std::move(t));
  }
  return from_terms(std::move(quot));
}

std::complex<double> LaurentPoly::eval(const NumericAssignment& at) const {
  std::complex<double> vals[kNumVars];
  vals[kVarS] = at.s;
  for (int b = 0; b < kMaxBlocks; ++b) vals[var_z(b)] = at.z[b];
  vals[kVarT] = at.t;
  std::complex<double> sum = 0;
  for (const auto& t : terms_) {
    std::complex<double> term = t.coef.to_complex();
    for (int v = 0; v < kNumVars; ++v)
      if (t.exps[v] != 0) term *= std::pow(vals[v], t.exps[v]);
    sum += term;
  }
  return sum;
}

namespace {

// Memoized integer powers of one exact value.
class PowerCache {
 public:
  explicit PowerCache(GaussianRational base) : base_(std::move(base)) {}
  const GaussianRational& get(int k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    GaussianRational r = 1;
    if (k != 0) {
      GaussianRational b = k > 0 ? base_ : base_.inverse();
      int e = std::abs(k);
      while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
      }
    }
    return cache_.emplace(k, std::move(r)).first->second;
  }

 private:
  GaussianRational base_;
  std::map<int, GaussianRational> cache_;
};

}  // namespace

GaussianRational LaurentPoly::eval(const ExactAssignment& at) const {
  std::vector<PowerCache> caches;
  caches.reserve(kNumVars);
  caches.emplace_back(at.s);
  for (int b = 0; b < kMaxBlocks; ++b) caches.emplace_back(at.z[b]);
  caches.emplace_back(at.t);
  GaussianRational sum;
  for (const auto& t : terms_) {
    GaussianRational term = t.coef;
    for (int v = 0; v < kNumVars; ++v)
      if (t.exps[v] != 0) term *= caches[v].get(t.exps[v]);
    sum += term;
  }
  return sum;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string body = exps_str(it->exps);
    std::string c = it->coef.str();
    bool negative = it->coef.is_real() && sgn(it->coef.re()) < 0;
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    if (negative) c = (-it->coef).str();
    if (body.empty()) {
      out << c;
    } else {
      if (c != "1") out << c << "*";
      out << body;
    }
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// FracScalar

FracScalar::FracScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("FracScalar with zero denominator");
  normalize(true);
}

FracScalar FracScalar::unreduced(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw ArithmeticError("FracScalar with zero denominator");
  FracScalar r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.normalize(false);
  return r;
}

void FracScalar::normalize(bool with_gcd) {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_one()) return;
  auto absorb_monomial_den = [this] {
    Exponent mn = den_.min_exps();
    if (mn != Exponent{}) {
      Exponent neg;
      for (int v = 0; v < kNumVars; ++v) neg[v] = -mn[v];
      num_ = num_.shifted(neg);
      den_ = den_.shifted(neg);
    }
    if (den_.is_monomial()) {
      num_ = num_.scaled(den_.terms()[0].coef.inverse());
      den_ = LaurentPoly(1);
      return true;
    }
    return false;
  };
  if (absorb_monomial_den()) return;
  if (with_gcd) {
    std::optional<LaurentPoly> g = poly_gcd_bounded(num_, den_);
    if (g && !g->is_one()) {
      num_ = *LaurentPoly::divide(num_, *g);
      den_ = *LaurentPoly::divide(den_, *g);
      if (absorb_monomial_den()) return;
    }
  }
  const GaussianRational& lc = den_.leading().coef;
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

FracScalar FracScalar::operator-() const {
  FracScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

FracScalar& FracScalar::operator+=(const FracScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize(!den_.is_one());
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize(true);
  return *this;
}

FracScalar& FracScalar::operator-=(const FracScalar& o) { return *this += -o; }

FracScalar& FracScalar::operator*=(const FracScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = FracScalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize(true);
  return *this;
}

FracScalar FracScalar::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero FracScalar");
  return FracScalar(den_, num_);
}

FracScalar& FracScalar::operator/=(const FracScalar& o) { return *this *= o.inverse(); }

bool operator==(const FracScalar& a, const FracScalar& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string FracScalar::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------

FracScalar gauss_bracket(const Monomial& m) {
  LaurentPoly num = LaurentPoly(m) - LaurentPoly(m.inverse());
  LaurentPoly den = LaurentPoly(Monomial::s_pow(2)) - LaurentPoly(Monomial::s_pow(-2));
  return FracScalar(std::move(num), std::move(den));
}

LaurentPoly qnumber(int n, const Monomial& base) {
  if (n < 0) return -qnumber(-n, base);
  LaurentPoly r;
  for (int k = n - 1; k >= -(n - 1); k -= 2) r += LaurentPoly(base.pow(k));
  return r;
}

LaurentPoly qbinom(int n, int k, const Monomial& base) {
  if (k < 0 || k > n) throw std::invalid_argument("qbinom requires 0 <= k <= n");
  // [n,k] = b^{-k}[n-1,k] + b^{n-k}[n-1,k-1]
  std::vector<LaurentPoly> row{LaurentPoly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<LaurentPoly> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      LaurentPoly v;
      if (j < m) v += row[j].times(base.pow(-j));
      if (j > 0) v += row[j - 1].times(base.pow(m - j));
      next[j] = std::move(v);
    }
    row = std::move(next);
  }
  return row[k];
}

std::complex<double> eval_numeric(const FracScalar& x, const NumericAssignment& at,
                                  const EvalOptions& opts) {
  std::complex<double> den = x.den().eval(at);
  if (std::abs(den) < opts.zero_threshold)
    throw ArithmeticError("denominator evaluates to (near) zero");
  return x.num().eval(at) / den;
}

GaussianRational eval_exact(const FracScalar& x, const ExactAssignment& at) {
  GaussianRational den = x.den().eval(at);
  if (den.is_zero()) throw ArithmeticError("denominator vanishes at the assignment");
  return x.num().eval(at) / den;
}

}  // namespace qclass
