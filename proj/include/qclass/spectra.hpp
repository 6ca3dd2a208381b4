#pragma once

// Eigenvalues of the quantum coordinate matrix on C^N (x) M, minimal
// polynomials, central characters of the q-traces, classical limits, and the
// Jacobian check of the classical ideal.

#include <complex>
#include <string>
#include <vector>

#include "qclass/check.hpp"
#include "qclass/rootdata.hpp"

namespace qclass {

// q^{2(lambda+rho,nu) - 2(rho,eps_1) + (nu,nu) - 1}.
Monomial hw_eigenvalue(const HighestWeight& hw, const WeightVec& nu);

struct Eigenvalue {
  std::string role;  // "mu_i", "mu_i^-1 q^(-2N+2(n_i+1))", or "mu_{l+3}" for the dropped one
  Monomial value;
};

// mu_1..mu_{l+2} and the reflected values; the quotient list drops mu_{l+3}.
std::vector<Eigenvalue> q_eigenvalues(const ClassData& cls, const ParamAssignment& param, bool quotient);
// Same values from the highest-weight formula at the nu_i, in the same order.
std::vector<Eigenvalue> q_eigenvalues_from_weights(const ClassData& cls, const ParamAssignment& param, bool quotient);
bool pairwise_distinct(const std::vector<Eigenvalue>& values);

enum class PolyMode { Quantum, Classical };
// Roots in the order (mu_1..mu_l, mu_{l+1}, mu_{l+2}, reflected mu_l..mu_1); the
// classical list is (mu_1..mu_l, -1, 1, mu_l^-1..mu_1^-1) with mu_i = z_i^2.
std::vector<Monomial> min_poly(const ClassData& cls, const ParamAssignment& param, PolyMode mode);
// The s -> 1 limit of a signed monomial: the s exponent is dropped.
Monomial classical_limit(const Monomial& m);

class SingularWeightError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// chi^lambda(tau_k), summed over the N weights of C^N. Throws SingularWeightError
// if some (lambda + rho, alpha) factor vanishes.
FracScalar central_character(const HighestWeight& hw, int k);

// Right hand side of the classical trace relation: sum n_i (mu_i^k + mu_i^-k) + 2m(-1)^k + P.
GaussianRational classical_trace(const ClassData& cls, const std::vector<GaussianRational>& mu, int k);

struct LimitResult {
  double extrapolated = 0;
  double imag = 0;
  double classical = 0;
  double rel_error = 0;
};
// Exact evaluation at s = 1 + eps for eps = 1e-4, 1e-5 (specialized class,
// z_i = zeta_i), then Richardson extrapolation to eps = 0.
LimitResult trace_limit(const ClassData& cls, const std::vector<GaussianRational>& zeta, int k);

struct ClassicalPoint {
  std::vector<GaussianRational> mu;  // mu_1..mu_l
  std::vector<GaussianRational> diag;  // the diagonal of o
};
// o = diag(mu_1 (n_1 times), ..., -1 (m), 1 (P), -1 (m), ..., mu_1^-1 (n_1)).
ClassicalPoint classical_point(const ClassData& cls, const std::vector<GaussianRational>& mu);

struct IdealCheck {
  bool group_relation = false;  // o C o^t = C
  bool min_poly = false;
  bool traces = false;
  int jacobian_rank = 0;
  int expected_rank = 0;
};
// Throws std::invalid_argument for non-regular mu.
IdealCheck classical_ideal_check(const ClassData& cls, const ClassicalPoint& point);

std::vector<Outcome> verify_spectra(const ClassData& cls, ParamMode mode);

}  // namespace qclass
