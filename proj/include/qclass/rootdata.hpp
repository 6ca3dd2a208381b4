#pragma once

// Root data of B_n / D_n, the class datum (n_1..n_l, m, p) and the
// parametrization of the highest weight lambda by block base monomials.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qclass/coeff.hpp"

namespace qclass {

enum class Series { B, D };

struct OrthoRank {
  int N = 0;
  Series series = Series::D;
  int n = 0;

  static OrthoRank from_N(int N);  // throws std::invalid_argument
  bool is_B() const { return series == Series::B; }
};

// Weight in the epsilon basis, coordinates stored doubled.
struct WeightVec {
  std::vector<int> twice;

  WeightVec() = default;
  explicit WeightVec(int n) : twice(n, 0) {}
  static WeightVec eps(int n, int i);  // epsilon_i, i is 1-based
  static WeightVec from_ints(const std::vector<int>& coords);

  int size() const { return static_cast<int>(twice.size()); }
  bool is_zero() const;
  bool integral() const;  // all coordinates are integers
  int coord(int i) const;  // integral coordinate, 1-based

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator-=(const WeightVec& o);
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
  friend WeightVec operator*(int k, WeightVec a);
  friend bool operator==(const WeightVec& a, const WeightVec& b) { return a.twice == b.twice; }
  friend bool operator!=(const WeightVec& a, const WeightVec& b) { return !(a == b); }
  friend bool operator<(const WeightVec& a, const WeightVec& b) { return a.twice < b.twice; }
  std::string str() const;
};

// Twice the inner product, i.e. the exponent of s in q^{(x,y)}. Throws if not integral.
int pairing_s_exp(const WeightVec& x, const WeightVec& y);
// 4 (x,y), always an integer.
int pairing4(const WeightVec& x, const WeightVec& y);

std::vector<WeightVec> simple_roots(const OrthoRank& rank);  // alpha_1..alpha_n at index 0..n-1
std::vector<std::vector<int>> cartan_matrix(const OrthoRank& rank);
WeightVec rho(const OrthoRank& rank);
std::vector<WeightVec> positive_roots(const OrthoRank& rank);

// Simple-root coordinates of an element of the root lattice (index 0 = alpha_1).
std::vector<int> simple_coords(const OrthoRank& rank, const WeightVec& x);
WeightVec from_simple_coords(const OrthoRank& rank, const std::vector<int>& c);

// Exponent of s for the base q_i of the simple root alpha_i: 2 for long roots, 1 for the B short root.
int root_base_s_exp(const OrthoRank& rank, int i);

struct ValidationError {
  std::string field;
  std::string constraint;
  std::string message;
};

class ClassDataError : public std::invalid_argument {
 public:
  explicit ClassDataError(ValidationError e)
      : std::invalid_argument(e.field + ": " + e.message), error(std::move(e)) {}
  ValidationError error;
};

struct ClassData {
  int N = 0;
  std::vector<int> gl_blocks;
  int m = 0;
  int p = 0;

  static ClassData make(int N, std::vector<int> gl_blocks, int m, int p);  // validates
  std::optional<ValidationError> validate() const;

  OrthoRank rank() const { return OrthoRank::from_N(N); }
  int n() const { return N / 2; }
  int ell() const { return static_cast<int>(gl_blocks.size()); }
  int P() const { return N % 2 == 0 ? 2 * p : 2 * p + 1; }
  bool symmetric() const { return gl_blocks.empty(); }

  // Sizes of the blocks 1..l+2 (the last one is the so(P) block of rank p).
  std::vector<int> block_sizes() const;
  // Block number (1-based) of the epsilon index j (1-based).
  int block_of(int j) const;
  // Boundaries n_1, n_1+n_2, ..., n-p: the simple roots outside the Levi part.
  std::set<int> non_levi_indices() const;
  std::set<int> levi_simple_indices() const;
  std::string str() const;
};

// delta = alpha_{n-p-1} + 2 alpha_{n-p} + ... (1-based multiplicities at index i-1).
std::vector<int> delta_coords(const ClassData& cls);
WeightVec delta(const ClassData& cls);
int height(const std::vector<int>& coords);

// Number of multisets of positive roots outside the Levi part summing to beta.
long kostant_dim(const ClassData& cls, const std::vector<int>& beta);

enum class ParamMode { Generic, Specialized };

// q^{(lambda, epsilon_j)} per block; blocks l+1 and l+2 carry the m-block and so(P) values.
struct ParamAssignment {
  ParamMode mode = ParamMode::Specialized;
  std::vector<Monomial> block_base;

  static ParamAssignment make(const ClassData& cls, ParamMode mode);
};

// Source of q^{(lambda, x)} for integral x; either a parametrized class weight
// or an explicit weight.
class HighestWeight {
 public:
  HighestWeight(const ClassData& cls, ParamAssignment param);
  explicit HighestWeight(const OrthoRank& rank, WeightVec lambda);

  const OrthoRank& rank() const { return rank_; }
  // q^{(lambda, x)} for x integral in the epsilon basis.
  Monomial pair(const WeightVec& x) const;
  // q^{(alpha_i, lambda - beta)} with beta in simple coordinates (i is 0-based).
  Monomial cartan(int i, const std::vector<int>& beta) const;

 private:
  OrthoRank rank_;
  std::vector<WeightVec> roots_;
  std::optional<ClassData> cls_;
  ParamAssignment param_;
  std::optional<WeightVec> lambda_;
};

// mu_i = q^{2 Lambda_i - 2(n_1 + ... + n_{i-1})}, i = 1..l+2.
std::vector<Monomial> mu_vector(const ClassData& cls, const ParamAssignment& param);

std::string mode_name(ParamMode mode);

}  // namespace qclass
