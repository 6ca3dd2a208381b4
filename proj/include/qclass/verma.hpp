#pragma once

// Weight-truncated parabolic Verma modules M-hat_lambda and their quotients by
// the submodule generated by a singular vector.
//
// A weight space at offset beta (simple-root coordinates) is built from the
// spaces at beta - alpha_i: every vector is a sum of f_i (x) u_i, and the only
// new relations are Serre relations placed at the front of basis vectors of
// lower spaces, plus f_j v_lambda = 0 for Levi j. This yields bases, the f_i
// matrices and (given lambda) the e_i matrices.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qclass/linalg.hpp"
#include "qclass/rootdata.hpp"

namespace qclass {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Word-length cap: QCLASS_CAP_WORDLEN if set to a positive integer, else 12.
int word_length_cap();

using Beta = std::vector<int>;  // simple-root coordinates, index 0 = alpha_1

// f_{w[0]} f_{w[1]} ... f_{w[d-1]} v_lambda, letters 1-based.
using Word = std::vector<int>;

Beta word_offset(const OrthoRank& rank, const Word& w);

struct WordVector {
  std::map<Word, FracScalar> terms;

  WordVector() = default;
  explicit WordVector(Word w, FracScalar c = FracScalar(1));

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const FracScalar& c);
  WordVector& operator+=(const WordVector& o);
  WordVector& operator-=(const WordVector& o);
  WordVector scaled(const FracScalar& c) const;
  friend WordVector operator+(WordVector a, const WordVector& b) { return a += b; }
  friend WordVector operator-(WordVector a, const WordVector& b) { return a -= b; }
  // Offset of the terms; throws std::invalid_argument if they differ.
  Beta offset(const OrthoRank& rank) const;
  std::string str() const;
};

// Left multiplication by the word u: u * v.
WordVector left_mul(const Word& u, const WordVector& v);
// [X, Y]_a = XY - aYX for single letters, as a two-term word prefix applied to v.
WordVector qcommutator_apply(int x, int y, const FracScalar& a, const WordVector& v);

// All distinct words of offset beta; throws ResourceError above the cap.
std::vector<Word> enumerate_words(const OrthoRank& rank, const Beta& beta, int cap = word_length_cap());

// Serre relations among the f's (homogeneous word combinations, no v_lambda).
std::vector<WordVector> serre_relations(const OrthoRank& rank);

// Word-level e_i (1-based): commute e_i to the right through the letters.
WordVector apply_e_words(const HighestWeight& hw, int i, const WordVector& v);
// <x*, y> by full rewriting of the e-letters of x* through y.
FracScalar shapovalov(const HighestWeight& hw, const Word& x, const Word& y);

// Common interface of M-hat_lambda and its quotients. Vectors at offset beta
// are coordinate vectors in the basis of the weight space.
class WeightModule {
 public:
  virtual ~WeightModule() = default;
  virtual const OrthoRank& rank() const = 0;
  virtual const HighestWeight& highest_weight() const = 0;
  virtual int dim(const Beta& beta) = 0;
  // f_i (0-based) from offset beta - alpha_i to beta.
  virtual SparseQMatrix f_matrix(int i, const Beta& beta) = 0;
  // e_i (0-based) from offset beta to beta - alpha_i.
  virtual SparseQMatrix e_matrix(int i, const Beta& beta) = 0;
  // Coordinates of a word combination of offset beta.
  virtual SparseVec coords(const WordVector& v) = 0;
  // A word combination representing the coordinate vector.
  virtual WordVector to_words(const Beta& beta, const SparseVec& x) = 0;

  // x at beta, result at beta + alpha_i (resp. beta - alpha_i); i is 0-based.
  virtual SparseVec apply_f(int i, const Beta& beta, const SparseVec& x);
  virtual SparseVec apply_e(int i, const Beta& beta, const SparseVec& x);
  WordVector normal_form(const WordVector& v);
  // Kernel of all e_i at offset beta.
  std::vector<SparseVec> singular_space(const Beta& beta);
  // Kernel of the e_i with i (0-based) in the given set.
  std::vector<SparseVec> common_kernel(const Beta& beta, const std::vector<int>& which);
};

class ParabolicVerma : public WeightModule {
 public:
  ParabolicVerma(const ClassData& cls, ParamAssignment param, int cap = word_length_cap());
  // Explicit highest weight with the given Levi part (1-based indices).
  ParabolicVerma(const OrthoRank& rank, WeightVec lambda, std::set<int> levi, int cap = word_length_cap());

  const OrthoRank& rank() const override { return rank_; }
  const HighestWeight& highest_weight() const override { return hw_; }
  int dim(const Beta& beta) override;
  SparseQMatrix f_matrix(int i, const Beta& beta) override;
  SparseQMatrix e_matrix(int i, const Beta& beta) override;
  SparseVec coords(const WordVector& v) override;
  WordVector to_words(const Beta& beta, const SparseVec& x) override;
  SparseVec apply_f(int i, const Beta& beta, const SparseVec& x) override;
  SparseVec apply_e(int i, const Beta& beta, const SparseVec& x) override;

  const std::vector<Word>& basis_words(const Beta& beta);
  // Rank of the relation space in the ambient sum of f_i (x) lower spaces.
  int relation_rank(const Beta& beta);
  std::size_t cached_spaces() const;

 private:
  struct Space {
    int dim = 0;
    std::vector<Word> words;
    std::vector<std::pair<int, int>> origin;  // basis k = f_{letter} (x) basis r of the lower space
    std::vector<SparseQMatrix> f;  // per letter, from beta - alpha_i; empty when beta_i = 0
    std::vector<std::optional<SparseQMatrix>> e;  // lazily built
    int relation_rank = 0;
  };
  Space& space(const Beta& beta);
  std::unique_ptr<Space> build(const Beta& beta);
  const SparseQMatrix& e_ref(int i, const Beta& beta);
  SparseVec word_coords(const Word& w);

  OrthoRank rank_;
  HighestWeight hw_;
  std::set<int> levi_;
  int cap_;
  std::vector<WordVector> serre_;
  std::vector<Beta> serre_offsets_;
  std::map<Beta, std::unique_ptr<Space>> cache_;
  std::map<Word, SparseVec> word_cache_;
  mutable std::recursive_mutex mu_;
};

// M-hat_lambda / (submodule generated by a vector at offset gamma).
class VermaQuotient : public WeightModule {
 public:
  VermaQuotient(std::shared_ptr<ParabolicVerma> base, Beta gamma, SparseVec generator);

  const OrthoRank& rank() const override { return base_->rank(); }
  const HighestWeight& highest_weight() const override { return base_->highest_weight(); }
  int dim(const Beta& beta) override;
  SparseQMatrix f_matrix(int i, const Beta& beta) override;
  SparseQMatrix e_matrix(int i, const Beta& beta) override;
  SparseVec coords(const WordVector& v) override;
  WordVector to_words(const Beta& beta, const SparseVec& x) override;

  ParabolicVerma& base() { return *base_; }
  // Row-reduced span of the submodule at beta in base coordinates.
  const Echelon& submodule(const Beta& beta);
  int submodule_rank(const Beta& beta) { return submodule(beta).rank(); }
  // Projection of base coordinates to quotient coordinates.
  SparseVec project(const Beta& beta, const SparseVec& x);
  SparseVec lift(const Beta& beta, const SparseVec& x);

 private:
  struct Part {
    Echelon sub;
    std::vector<int> free_cols;  // base coordinates kept in the quotient
    std::map<int, int> position;  // base coordinate -> quotient coordinate
  };
  Part& part(const Beta& beta);

  std::shared_ptr<ParabolicVerma> base_;
  Beta gamma_;
  SparseVec generator_;
  std::map<Beta, std::unique_ptr<Part>> cache_;
  std::recursive_mutex mu_;
};

// Brute-force oracle: dimension of the span of all words of offset beta modulo
// u * sigma * w (Serre sigma) and words ending in a Levi letter.
struct BruteSpace {
  std::vector<Word> words;
  Echelon relations;
  int dim() const { return static_cast<int>(words.size()) - relations.rank(); }
};
BruteSpace brute_space(const OrthoRank& rank, const std::set<int>& levi, const Beta& beta,
                       int cap = word_length_cap());

}  // namespace qclass
