#include "doctest.h"
#include "qclass/natrep.hpp"

using namespace qclass;

TEST_SUITE("natrep") {
  TEST_CASE("arrow diagrams") {
    NatAction b2 = build_natrep(OrthoRank::from_N(5));
    // f_{alpha_2}: w2 -> w3 -> w4
    CHECK(!b2.f[1].at(2, 1).is_zero());
    CHECK(!b2.f[1].at(3, 2).is_zero());
    CHECK(b2.f[1].nonzeros() == 2);
    NatAction d4 = build_natrep(OrthoRank::from_N(8));
    // f_{alpha_4}: w3 -> w5, w4 -> w6
    CHECK(!d4.f[3].at(4, 2).is_zero());
    CHECK(!d4.f[3].at(5, 3).is_zero());
    CHECK(d4.f[3].nonzeros() == 2);
    for (int N : {5, 7, 8, 9}) {
      NatAction nat = build_natrep(OrthoRank::from_N(N));
      for (int i = 0; i < nat.rank.n; ++i) {
        for (int r = 0; r < N; ++r) {
          for (const auto& [c, v] : nat.f[i].row(r).entries()) {
            // entries above the skew diagonal are +1, below -1
            CHECK(v == FracScalar((r + 1) + (c + 1) < N + 1 ? 1 : -1));
            CHECK(nat.e[i].at(c, r).is_polynomial());
            CHECK(nat.e[i].at(c, r).num().is_constant());
          }
        }
      }
    }
  }

  TEST_CASE("defining relations") {
    for (int N : {5, 7, 8, 9}) {
      NatAction nat = build_natrep(OrthoRank::from_N(N));
      for (const auto& r : check_defining_relations(nat)) CHECK_MESSAGE(r.pass, "N=" << N << " " << r.name << ": " << r.detail);
    }
  }

  TEST_CASE("R-matrix layer") {
    for (int N : {5, 7, 8, 9}) {
      OrthoRank rank = OrthoRank::from_N(N);
      auto qybe = check_qybe(rank);
      CHECK_MESSAGE(qybe.pass, qybe.detail);
      auto sp = check_s_spectrum(rank);
      CHECK_MESSAGE(sp.pass, sp.detail);
      auto kp = check_kappa(rank);
      CHECK_MESSAGE(kp.pass, kp.detail);
      for (const auto& r : check_reflection_relations(rank)) CHECK_MESSAGE(r.pass, "N=" << N << " " << r.name << ": " << r.detail);
      auto inv = check_s_invariance(build_natrep(rank));
      CHECK_MESSAGE(inv.pass, inv.detail);
    }
  }

  TEST_CASE("R-matrix diagonal") {
    OrthoRank rank = OrthoRank::from_N(7);
    SparseQMatrix r = rmatrix(rank);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        int e = (i == j) - (i == 6 - j);
        if (i > j && i != 6 - j) continue;  // off-diagonal corrections only touch i' j' blocks
        if (i == j || i + j == 6) continue;
        CHECK(r.at(i * 7 + j, i * 7 + j) == FracScalar(Monomial::q_pow(e)));
      }
  }

  TEST_CASE("kappa carries rho exponents") {
    OrthoRank rank = OrthoRank::from_N(5);
    SparseQMatrix k = kappa(rank);
    CHECK(k.rank() == 1);
    CHECK(k * k == k);
    // qtrace of the identity is the quantum dimension
    FracScalar qdim = qtrace(SparseQMatrix::identity(5), rank);
    LaurentPoly expected;
    for (int e : {3, 1, 0, -1, -3}) expected += LaurentPoly(Monomial::q_pow(e));
    CHECK(qdim == FracScalar(expected));
    SparseQMatrix diag(5, 5);
    auto rt = nat_rho_twice(rank);
    for (int k2 = 0; k2 < 5; ++k2) diag.set(k2, k2, FracScalar(Monomial::s_pow(-2 * rt[k2])));
    CHECK(qtrace(diag, rank) == FracScalar(5));
  }
}
