#include <random>

#include "doctest.h"
#include "qclass/linalg.hpp"

using namespace qclass;

namespace {

FracScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3), e(-2, 2);
  LaurentPoly p = LaurentPoly(Monomial::s_pow(e(rng)), GaussianRational(d(rng))) + LaurentPoly(d(rng));
  return FracScalar(p);
}

SparseVec random_vec(std::mt19937& rng, int dim, int fill) {
  std::uniform_int_distribution<int> idx(0, dim - 1);
  SparseVec v;
  for (int k = 0; k < fill; ++k) v.set(idx(rng), random_scalar(rng));
  return v;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("echelon membership and canonical residues") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      const int dim = 8;
      std::vector<SparseVec> gens;
      for (int k = 0; k < 4; ++k) gens.push_back(random_vec(rng, dim, 3));
      Echelon e;
      for (const auto& g : gens) e.insert(g);
      CHECK(e.rank() <= 4);
      SparseVec combo;
      for (const auto& g : gens) combo.axpy(random_scalar(rng), g);
      CHECK(e.contains(combo));
      SparseVec x = random_vec(rng, dim, 4);
      CHECK(e.reduce(x) == e.reduce(x + combo));
      CHECK(e.reduce(e.reduce(x)) == e.reduce(x));
      for (const auto& [p, row] : e.rows()) {
        CHECK(row.lead_index() == p);
        CHECK(row.lead_value().is_one());
      }
    }
  }

  TEST_CASE("kernel") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const int dim = 7;
      std::vector<SparseVec> rows;
      for (int k = 0; k < 4; ++k) rows.push_back(random_vec(rng, dim, 4));
      Echelon e;
      for (const auto& r : rows) e.insert(r);
      auto ker = kernel(rows, dim);
      CHECK(static_cast<int>(ker.size()) == dim - e.rank());
      for (const auto& x : ker) {
        for (const auto& r : rows) {
          FracScalar dot;
          for (const auto& [k, v] : r.entries()) dot += v * x.at(k);
          CHECK(dot.is_zero());
        }
      }
      Echelon kb;
      for (const auto& x : ker) kb.insert(x);
      CHECK(kb.rank() == static_cast<int>(ker.size()));
    }
  }

  TEST_CASE("matrix products and Kronecker") {
    SparseQMatrix a(2, 2), b(2, 2);
    a.set(0, 0, 1);
    a.set(0, 1, FracScalar(Monomial::s_pow(1)));
    a.set(1, 1, 2);
    b.set(1, 0, 3);
    SparseQMatrix ab = a * b;
    CHECK(ab.at(0, 0) == FracScalar(LaurentPoly(Monomial::s_pow(1), 3)));
    CHECK(ab.at(1, 0) == FracScalar(6));
    CHECK(ab.at(0, 1).is_zero());
    CHECK((a * SparseQMatrix::identity(2)) == a);
    SparseQMatrix k = kron(a, b);
    CHECK(k.rows() == 4);
    CHECK(k.at(1, 0) == FracScalar(3));       // a00 * b10
    CHECK(k.at(3, 2) == FracScalar(6));       // a11 * b10
    CHECK(kron(a, b) * kron(b, a) == kron(a * b, b * a));
    CHECK(a.transpose().at(1, 0) == a.at(0, 1));
    CHECK(a.trace() == FracScalar(3));
    CHECK(a.rank() == 2);
    CHECK(b.rank() == 1);
  }
}
