#pragma once

// C^N (x) M for a weight module M (the parabolic Verma module or its
// quotient), with the coproduct action, and submodules generated by finitely
// many homogeneous vectors, computed weight by weight.
//
// Weights are offsets gamma from the top weight lambda + eps_1 in simple
// coordinates; the component at gamma is the sum over k of w_k (x) M at
// beta_k = gamma - d_k, where d_k are the coordinates of eps_1 - wt(w_k).

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "qclass/check.hpp"
#include "qclass/natrep.hpp"
#include "qclass/singular.hpp"

namespace qclass {

struct TensorVector {
  std::map<std::pair<int, Word>, FracScalar> terms;  // (basis index k, word) -> coefficient

  bool is_zero() const { return terms.empty(); }
  void add(int k, const Word& w, const FracScalar& c);
  std::string str() const;
};

class TensorModule {
 public:
  struct Block {
    int k;
    Beta beta;
    int dim;
    int offset;
  };
  struct Layout {
    std::vector<Block> blocks;
    int dim = 0;
  };

  explicit TensorModule(std::shared_ptr<WeightModule> module);

  WeightModule& module() { return *module_; }
  const NatAction& nat() const { return nat_; }
  int N() const { return nat_.rank.N; }
  const Beta& nat_offset(int k) const { return d_[k]; }

  const Layout& layout(const Beta& gamma);
  Beta weight_of(const TensorVector& v) const;
  // Flat coordinates at the weight of v (which must be homogeneous).
  SparseVec coords(const TensorVector& v, Beta* gamma = nullptr);
  TensorVector to_terms(const Beta& gamma, const SparseVec& x);

  SparseVec apply_f(int i, const Beta& gamma, const SparseVec& x);  // result at gamma + alpha_i
  SparseVec apply_e(int i, const Beta& gamma, const SparseVec& x);  // result at gamma - alpha_i
  TensorVector t_apply_f(int i, const TensorVector& v);
  TensorVector t_apply_e(int i, const TensorVector& v);

  // w_k (x) v_lambda.
  TensorVector basis_tensor(int k) const;

 private:
  std::shared_ptr<WeightModule> module_;
  NatAction nat_;
  std::vector<Beta> d_;
  std::map<Beta, Layout> layouts_;
};

// Maximum number of weights a single closure may visit (QCLASS_CAP_WINDOW, default 200000).
int window_cap();

class TensorSubmodule {
 public:
  TensorSubmodule(TensorModule& T, const std::vector<TensorVector>& generators);

  // Weight-gamma component of the generated submodule.
  const Echelon& component(const Beta& gamma);
  bool contains(const TensorVector& v);

  std::size_t stage1_weights() const { return up_.size(); }
  std::size_t stage2_weights() const { return down_.size(); }

 private:
  const Echelon& up(const Beta& gamma);  // U(n+) applied to the generators
  bool below_generator(const Beta& gamma) const;
  void count();

  TensorModule& T_;
  std::map<Beta, std::vector<SparseVec>> gens_;
  std::map<Beta, Echelon> up_, down_;
};

// Basis index of the vector of weight nu_i (1-based i, up to 2l+3).
std::vector<int> nu_indices(const ClassData& cls);

std::vector<Outcome> verify_filtration(const ClassData& cls, ParamMode mode);
std::vector<Outcome> verify_span(const ClassData& cls, ParamMode mode);
std::vector<Outcome> verify_u_nu2_congruence(const ClassData& cls, ParamMode mode);

TensorVector u_nu2_tensor(const ClassData& cls, const ParamAssignment& param);

}  // namespace qclass
