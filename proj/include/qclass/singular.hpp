#pragma once

// The explicit vectors omega, x_i, x'_i, x''_i, y_k, the coefficients c_i and
// v_{lambda-delta}, built inside the subalgebra g' of rank p+2 whose simple
// roots are alpha_{n-p-1}, ..., alpha_n (all of g for symmetric classes with
// m = 2). Indices below are the normalized ones of g': alpha_2 is the
// boundary root alpha_{n-p}.

#include <map>
#include <memory>
#include <vector>

#include "qclass/check.hpp"
#include "qclass/verma.hpp"

namespace qclass {

struct ConstructionSet {
  ClassData cls;
  int rank_prime = 0;  // n' = p + 2
  bool odd = false;  // g' of type B
  int shift = 0;  // normalized letter k is alpha_{k + shift}
  int kappa_index = 0;  // normalized kappa: p for D, p + 1 for B
  Beta delta;
  WordVector omega;
  std::map<int, WordVector> x, xprime, xsecond;  // indexed 2..n' (xsecond from 3)
  std::map<int, WordVector> y;  // 2..n'-1
  std::map<int, FracScalar> c;  // 2..n'
  WordVector v_singular;

  int letter(int k) const { return k + shift; }
};

ConstructionSet build_constructions(const ClassData& cls);

// The equations of the recurrent system for the c_i, each evaluated exactly.
std::vector<FracScalar> rec_sys_c_residuals(const ConstructionSet& cs);

// Lemma names: omega_f, omega_e, y_zero, x_ker, xprime_nonzero, e_action, basis, almost_singular.
std::vector<std::string> lemma_names();
Outcome verify_lemma(const std::string& name, const ConstructionSet& cs, ParabolicVerma& M);

// Singular-vector checks for the given mode (see verify_singular in the docs):
// specialized: 1-dimensional singular space proportional to sum c_i x_i, and
// all simple raising operators kill v_{lambda-delta}; generic: no singular
// vector, plus the condition on lambda extracted from e_{alpha_2} v.
std::vector<Outcome> verify_singular(const ClassData& cls, ParamMode mode);

// The condition on lambda under which v_{lambda-delta} is killed by e_{alpha_2},
// derived from the generic-mode coefficient; empty if it could not be matched.
std::string singular_condition(const ClassData& cls);

// M_lambda = M-hat_lambda / <v_{lambda-delta}> for a specialized parameter.
std::shared_ptr<VermaQuotient> make_quotient(const ClassData& cls, std::shared_ptr<ParabolicVerma> base);

struct TensorTerm {
  int basis_index = 0;  // 0-based index k of w_{k+1}
  Word word;
  FracScalar coef;
};

// u_{nu_2} = [(alpha,lambda)] w_{m+1} (x) v + sum_k (-q)^{-k} w_{m+1-k} (x) f_{m+1-k}...f_m v,
// alpha = alpha_m, for l = 0. Throws std::invalid_argument for l > 0.
std::vector<TensorTerm> u_nu2(const ClassData& cls, const ParamAssignment& param);

}  // namespace qclass
