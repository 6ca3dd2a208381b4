#pragma once

// The natural representation of U_q(so(N)), the R-matrix R, S = PR, the
// projector kappa, and the evaluated identities they satisfy.

#include <string>
#include <vector>

#include "qclass/linalg.hpp"
#include "qclass/rootdata.hpp"

namespace qclass {

struct NatAction {
  OrthoRank rank;
  std::vector<WeightVec> weights;  // wt(w_k), k = 0..N-1
  std::vector<SparseQMatrix> e, f, K, Kinv;  // per simple root, 0-based
};

NatAction build_natrep(const OrthoRank& rank);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> check_defining_relations(const NatAction& nat);

// rho_k for the basis vector w_k (0-based), doubled: rho_{k'} = -rho_k.
std::vector<int> nat_rho_twice(const OrthoRank& rank);

SparseQMatrix flip_matrix(int N);  // P on C^N (x) C^N
SparseQMatrix rmatrix(const OrthoRank& rank);
SparseQMatrix smatrix(const OrthoRank& rank);
SparseQMatrix kappa(const OrthoRank& rank);

// Placement of an operator on two adjacent legs of (C^N)^{(x)3}.
SparseQMatrix on_legs12(const SparseQMatrix& x, int N);
SparseQMatrix on_legs23(const SparseQMatrix& x, int N);
SparseQMatrix on_legs13(const SparseQMatrix& x, int N);

CheckResult check_qybe(const OrthoRank& rank);
std::vector<CheckResult> check_reflection_relations(const OrthoRank& rank);
// S satisfies (S - q)(S + q^-1)(S - q^{1-N}) = 0 and no product of two of the factors vanishes.
CheckResult check_s_spectrum(const OrthoRank& rank);
CheckResult check_kappa(const OrthoRank& rank);
// For B_n the explicit R-matrix is written in the basis where w_{n+2}, ..., w_N
// are rescaled by s relative to the +-1 sign-rule basis; on that basis the
// short-root chain reads w_n -> w_{n+1} -> -s w_{n+2}. Identity for D_n.
SparseQMatrix r_adapted_rescaling(const OrthoRank& rank);
NatAction r_adapted(const NatAction& nat);
// S commutes with the coproduct image of every generator on (C^N)^{(x)2},
// with the action transported to the basis of the R-matrix.
CheckResult check_s_invariance(const NatAction& nat);

FracScalar qtrace(const SparseQMatrix& x, const OrthoRank& rank);
SparseQMatrix qtrace_leg1(const SparseQMatrix& x, const OrthoRank& rank);

// Coproduct images on C^N (x) C^N: Delta(f) = f (x) K^{-1} + 1 (x) f, Delta(e) = e (x) 1 + K (x) e.
SparseQMatrix coproduct_f(const NatAction& nat, int i);
SparseQMatrix coproduct_e(const NatAction& nat, int i);

}  // namespace qclass
