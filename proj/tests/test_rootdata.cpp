#include "doctest.h"
#include "qclass/rootdata.hpp"

using namespace qclass;

namespace {

ClassData symmetric(int N) {
  const int n = N / 2;
  const int p = N % 2 == 0 ? n - 2 : n - 2;
  return ClassData::make(N, {}, 2, p);
}

}  // namespace

TEST_SUITE("rootdata") {
  TEST_CASE("simple roots and Cartan matrices") {
    auto b2 = simple_roots(OrthoRank::from_N(5));
    CHECK(b2[0] == WeightVec::from_ints({1, -1}));
    CHECK(b2[1] == WeightVec::from_ints({0, 1}));
    auto d4 = simple_roots(OrthoRank::from_N(8));
    CHECK(d4[3] == WeightVec::from_ints({0, 0, 1, 1}));

    for (int N : {5, 7, 8, 9, 10, 11}) {
      OrthoRank r = OrthoRank::from_N(N);
      auto c = cartan_matrix(r);
      const int n = r.n;
      for (int i = 0; i < n; ++i) {
        CHECK(c[i][i] == 2);
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          bool adjacent = std::abs(i - j) == 1;
          if (r.series == Series::D && n >= 3) {
            // node n-1 hangs off n-3 rather than n-2
            if ((i == n - 1 && j == n - 2) || (i == n - 2 && j == n - 1)) adjacent = false;
            if ((i == n - 1 && j == n - 3) || (i == n - 3 && j == n - 1)) adjacent = true;
          }
          int expected = adjacent ? -1 : 0;
          if (r.series == Series::B && i == n - 1 && j == n - 2) expected = -2;
          CHECK_MESSAGE(c[i][j] == expected, "N=" << N << " i=" << i << " j=" << j);
        }
      }
    }
  }

  TEST_CASE("rho") {
    CHECK(rho(OrthoRank::from_N(7)).twice == std::vector<int>{5, 3, 1});
    CHECK(rho(OrthoRank::from_N(8)) == WeightVec::from_ints({3, 2, 1, 0}));
    for (int N : {5, 7, 8, 9}) {
      OrthoRank r = OrthoRank::from_N(N);
      for (const auto& a : simple_roots(r)) CHECK(2 * pairing4(rho(r), a) == pairing4(a, a));
    }
  }

  TEST_CASE("simple coordinates round trip") {
    for (int N : {5, 7, 8, 9, 10}) {
      OrthoRank r = OrthoRank::from_N(N);
      for (const auto& a : positive_roots(r)) {
        auto c = simple_coords(r, a);
        for (int x : c) CHECK(x >= 0);
        CHECK(from_simple_coords(r, c) == a);
      }
      CHECK(static_cast<int>(positive_roots(r).size()) == (r.is_B() ? r.n * r.n : r.n * (r.n - 1)));
    }
  }

  TEST_CASE("class validation") {
    CHECK_NOTHROW(ClassData::make(5, {}, 2, 0));
    CHECK_NOTHROW(ClassData::make(9, {1}, 2, 1));
    CHECK_THROWS_AS(ClassData::make(8, {}, 3, 1), ClassDataError);
    CHECK_THROWS_AS(ClassData::make(8, {}, 1, 3), ClassDataError);
    CHECK_THROWS_AS(ClassData::make(6, {}, 2, 1), ClassDataError);
    CHECK_THROWS_AS(ClassData::make(9, {2}, 2, 1), ClassDataError);
    try {
      ClassData::make(8, {}, 3, 1);
    } catch (const ClassDataError& e) {
      CHECK(e.error.field == "p");
    }
  }

  TEST_CASE("delta") {
    auto c5 = ClassData::make(5, {}, 2, 0);
    CHECK(delta_coords(c5) == std::vector<int>{1, 2});
    CHECK(height(delta_coords(c5)) == 3);
    auto c8 = ClassData::make(8, {}, 2, 2);
    CHECK(delta_coords(c8) == std::vector<int>{1, 2, 1, 1});
    CHECK(height(delta_coords(c8)) == 5);
    for (int N : {5, 7, 8, 9}) CHECK(delta(symmetric(N)) == WeightVec::from_ints(
        [&] { std::vector<int> v(N / 2, 0); v[0] = v[1] = 1; return v; }()));
    auto c9 = ClassData::make(9, {1}, 2, 1);
    CHECK(delta(c9) == WeightVec::from_ints({0, 1, 1, 0}));
  }

  TEST_CASE("Levi indices") {
    CHECK(ClassData::make(8, {}, 2, 2).non_levi_indices() == std::set<int>{2});
    CHECK(ClassData::make(8, {}, 2, 2).levi_simple_indices() == std::set<int>{1, 3, 4});
    CHECK(ClassData::make(9, {1}, 2, 1).non_levi_indices() == std::set<int>{1, 3});
    CHECK(ClassData::make(5, {}, 2, 0).non_levi_indices() == std::set<int>{2});
  }

  TEST_CASE("Kostant counts") {
    for (int N : {5, 7, 8, 9}) {
      auto c = symmetric(N);
      CHECK(kostant_dim(c, delta_coords(c)) == N - 3);
      CHECK(kostant_dim(c, std::vector<int>(c.n(), 0)) == 1);
      auto levi = c.levi_simple_indices();
      for (int j = 1; j <= c.n(); ++j) {
        std::vector<int> b(c.n(), 0);
        b[j - 1] = 1;
        CHECK(kostant_dim(c, b) == (levi.count(j) ? 0 : 1));
      }
    }
  }

  TEST_CASE("parameters") {
    for (int N : {5, 7, 8, 9}) {
      auto c = symmetric(N);
      ParamAssignment sp = ParamAssignment::make(c, ParamMode::Specialized);
      HighestWeight hw(c, sp);
      std::vector<int> zero(c.n(), 0);
      Monomial x = hw.cartan(c.n() - c.p - 1, zero);
      CHECK(x.pow(2) == Monomial::minus_one() * Monomial::q_pow(-c.P()));
      // lambda vanishes on the Levi roots
      for (int j : c.levi_simple_indices()) CHECK(hw.cartan(j - 1, zero).is_one());
    }
    auto c9 = ClassData::make(9, {1}, 2, 1);
    auto mu = mu_vector(c9, ParamAssignment::make(c9, ParamMode::Specialized));
    REQUIRE(mu.size() == 3);
    CHECK(mu[0] == Monomial::z_pow(0, 2));
    CHECK(mu[1] == Monomial::minus_one() * Monomial::q_pow(-3 - 2));
    CHECK(mu[2] == Monomial::q_pow(-2 * 3));

    auto c8 = ClassData::make(8, {}, 2, 2);
    auto mu8 = mu_vector(c8, ParamAssignment::make(c8, ParamMode::Specialized));
    CHECK(mu8[0] == Monomial::minus_one() * Monomial::q_pow(-4));
    CHECK(mu8[1] == Monomial::q_pow(-4));
    CHECK(mu8[0] != mu8[1]);
    auto c7 = ClassData::make(7, {}, 2, 1);
    auto mu7 = mu_vector(c7, ParamAssignment::make(c7, ParamMode::Specialized));
    CHECK(mu7[0] == Monomial::minus_one() * Monomial::q_pow(-3));
    CHECK(mu7[1] == Monomial::q_pow(-4));
  }

  TEST_CASE("cartan action shifts by the root pairing") {
    auto c = ClassData::make(8, {}, 2, 2);
    HighestWeight hw(c, ParamAssignment::make(c, ParamMode::Generic));
    // q^{(alpha_2, lambda - alpha_2)} = t * q^{-2}
    CHECK(hw.cartan(1, {0, 1, 0, 0}) == Monomial::t_pow(1) * Monomial::q_pow(-2));
    CHECK(hw.cartan(0, {0, 1, 0, 0}) == Monomial::q_pow(1));
    HighestWeight nat(OrthoRank::from_N(5), WeightVec::eps(2, 1));
    CHECK(nat.cartan(1, {0, 0}).is_one());
    CHECK(nat.cartan(0, {0, 0}) == Monomial::q_pow(1));
    CHECK(nat.cartan(1, {1, 0}) == Monomial::q_pow(1));
    CHECK(nat.cartan(1, {0, 1}).is_one() == false);
    CHECK(nat.cartan(1, {0, 1}) == Monomial::q_pow(-1));
  }
}
