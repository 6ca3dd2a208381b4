#pragma once

// Exact coefficient arithmetic: Gaussian rationals, Laurent polynomials in
// s = q^{1/2}, block parameters z_1..z_4 and a free parameter t, and the
// fraction field of those polynomials.

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qclass {

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussianRational imag_unit() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  GaussianRational inverse() const;
  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

// Variable slots of the exponent vector.
inline constexpr int kMaxBlocks = 4;
inline constexpr int kVarS = 0;
inline constexpr int kVarT = kMaxBlocks + 1;
inline constexpr int kNumVars = kMaxBlocks + 2;
inline constexpr int var_z(int block) { return 1 + block; }  // block is 0-based

using Exponent = std::array<int, kNumVars>;

// Signed monomial unit * s^a * z^b * t^c with unit a fourth root of unity.
struct Monomial {
  int unit = 0;  // power of i, in 0..3
  Exponent exps{};

  static Monomial one() { return {}; }
  static Monomial s_pow(int k) {
    Monomial m;
    m.exps[kVarS] = k;
    return m;
  }
  static Monomial q_pow(int k) { return s_pow(2 * k); }
  static Monomial z_pow(int block, int k) {
    Monomial m;
    m.exps[var_z(block)] = k;
    return m;
  }
  static Monomial t_pow(int k) {
    Monomial m;
    m.exps[kVarT] = k;
    return m;
  }
  static Monomial i_unit() { return {1, {}}; }
  static Monomial minus_one() { return {2, {}}; }

  int s_exp() const { return exps[kVarS]; }
  int t_exp() const { return exps[kVarT]; }

  Monomial inverse() const;
  Monomial pow(int k) const;
  bool is_one() const;
  GaussianRational unit_value() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.unit == b.unit && a.exps == b.exps;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.exps != b.exps) return a.exps < b.exps;
    return a.unit < b.unit;
  }
  std::string str() const;
};

// Values assigned to the variables when a polynomial is evaluated.
template <class T>
struct Assignment {
  T s{};
  std::array<T, kMaxBlocks> z{};
  T t{};
};
using NumericAssignment = Assignment<std::complex<double>>;
using ExactAssignment = Assignment<GaussianRational>;

class LaurentPoly {
 public:
  struct Term {
    Exponent exps;
    GaussianRational coef;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const GaussianRational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Monomial& m);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Monomial& m, const GaussianRational& c);
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Leading term in the lexicographic exponent order.
  const Term& leading() const { return terms_.back(); }

  Exponent min_exps() const;
  Exponent max_exps() const;
  bool uses_var(int v) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const GaussianRational& c) const;
  LaurentPoly shifted(const Exponent& e) const;  // multiply by the monomial with exponent e
  LaurentPoly times(const Monomial& m) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Exact quotient a / b in the Laurent ring, or nullopt if b does not divide a.
  static std::optional<LaurentPoly> divide(const LaurentPoly& a, const LaurentPoly& b);

  std::complex<double> eval(const NumericAssignment& at) const;
  GaussianRational eval(const ExactAssignment& at) const;
  std::string str() const;

 private:
  std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

// Greatest common divisor up to units (monomials and nonzero constants); the
// result is a polynomial with zero minimal exponents and leading coefficient 1.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Polynomials above these sizes skip GCD cancellation in FracScalar.
inline constexpr std::size_t kGcdTermLimit = 600;
inline constexpr std::size_t kMultivariateGcdTermLimit = 24;

// poly_gcd, or nullopt when the inputs exceed the size limits above and no
// cheap coprimality certificate applies.
std::optional<LaurentPoly> poly_gcd_bounded(const LaurentPoly& a, const LaurentPoly& b);

class FracScalar {
 public:
  FracScalar() : num_(), den_(1) {}
  FracScalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  FracScalar(const GaussianRational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  FracScalar(const Monomial& m) : num_(m), den_(1) {}  // NOLINT(google-explicit-constructor)
  FracScalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  FracScalar(LaurentPoly num, LaurentPoly den);
  // Skips the GCD step; only monomial and constant normalization is applied.
  static FracScalar unreduced(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  FracScalar operator-() const;
  FracScalar& operator+=(const FracScalar& o);
  FracScalar& operator-=(const FracScalar& o);
  FracScalar& operator*=(const FracScalar& o);
  FracScalar& operator/=(const FracScalar& o);
  FracScalar inverse() const;

  friend FracScalar operator+(FracScalar a, const FracScalar& b) { return a += b; }
  friend FracScalar operator-(FracScalar a, const FracScalar& b) { return a -= b; }
  friend FracScalar operator*(FracScalar a, const FracScalar& b) { return a *= b; }
  friend FracScalar operator/(FracScalar a, const FracScalar& b) { return a /= b; }
  // Decided by cross-multiplication.
  friend bool operator==(const FracScalar& a, const FracScalar& b);
  friend bool operator!=(const FracScalar& a, const FracScalar& b) { return !(a == b); }

  std::string str() const;

 private:
  void normalize(bool with_gcd);
  LaurentPoly num_;
  LaurentPoly den_;
};

// (m - m^{-1}) / (q - q^{-1}), the value of (q^h - q^{-h})/(q - q^{-1}) on a
// vector where q^h acts by m.
FracScalar gauss_bracket(const Monomial& m);

// [n]_b as a Laurent polynomial: (b^n - b^{-n}) / (b - b^{-1}).
LaurentPoly qnumber(int n, const Monomial& base);

// Symmetric q-binomial coefficient [n choose k] in the given base.
LaurentPoly qbinom(int n, int k, const Monomial& base);

struct EvalOptions {
  double zero_threshold = 1e-300;
};

std::complex<double> eval_numeric(const FracScalar& x, const NumericAssignment& at,
                                  const EvalOptions& opts = {});
GaussianRational eval_exact(const FracScalar& x, const ExactAssignment& at);

}  // namespace qclass
