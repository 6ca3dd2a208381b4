#include "qclass/natrep.hpp"

#include <sstream>

namespace qclass {

namespace {

// Arrows (source, target), 0-based, of f_{alpha_i} on the standard basis.
std::vector<std::pair<int, int>> f_arrows(const OrthoRank& rank, int i) {
  const int N = rank.N, n = rank.n;
  const int a = i + 1;  // 1-based root index
  std::vector<std::pair<int, int>> out;
  if (a < n) {
    out.emplace_back(a - 1, a);
    out.emplace_back(N - a - 1, N - a);
  } else if (rank.is_B()) {
    out.emplace_back(n - 1, n);
    out.emplace_back(n, n + 1);
  } else {
    out.emplace_back(n - 2, n);
    out.emplace_back(n - 1, n + 1);
  }
  return out;
}

FracScalar monomial_scalar(const Monomial& m) { return FracScalar(m); }

bool is_zero_matrix(const SparseQMatrix& m) { return m.is_zero(); }

}  // namespace

NatAction build_natrep(const OrthoRank& rank) {
  const int N = rank.N, n = rank.n;
  NatAction nat;
  nat.rank = rank;
  for (int k = 0; k < N; ++k) {
    if (k < n) nat.weights.push_back(WeightVec::eps(n, k + 1));
    else if (rank.is_B() && k == n) nat.weights.push_back(WeightVec(n));
    else nat.weights.push_back(-1 * WeightVec::eps(n, N - k));
  }
  const auto roots = simple_roots(rank);
  for (int i = 0; i < n; ++i) {
    SparseQMatrix f(N, N), e(N, N), K(N, N), Kinv(N, N);
    for (int k = 0; k < N; ++k) {
      Monomial m = Monomial::s_pow(pairing_s_exp(roots[i], nat.weights[k]));
      K.set(k, k, monomial_scalar(m));
      Kinv.set(k, k, monomial_scalar(m.inverse()));
    }
    auto arrows = f_arrows(rank, i);
    for (auto [src, dst] : arrows) {
      const int r = dst + 1, c = src + 1;
      f.set(dst, src, FracScalar(r + c < N + 1 ? 1 : -1));
    }
    // Reverse arrows: solve ([e,f] w)_w = [(alpha_i, wt w)] along each chain,
    // starting from sources (vectors without an incoming arrow).
    std::map<int, int> incoming;  // target -> source
    for (auto [src, dst] : arrows) incoming[dst] = src;
    std::vector<std::pair<int, int>> ordered = arrows;
    std::sort(ordered.begin(), ordered.end(), [&](auto x, auto y) {
      auto depth = [&](int v) {
        int d = 0;
        while (incoming.count(v)) v = incoming[v], ++d;
        return d;
      };
      return depth(x.first) < depth(y.first);
    });
    for (auto [src, dst] : ordered) {
      FracScalar target = gauss_bracket(Monomial::s_pow(pairing_s_exp(roots[i], nat.weights[src])));
      if (incoming.count(src)) {
        const int prev = incoming[src];
        target += f.at(src, prev) * e.at(prev, src);
      }
      e.set(src, dst, target / f.at(dst, src));
    }
    nat.f.push_back(std::move(f));
    nat.e.push_back(std::move(e));
    nat.K.push_back(std::move(K));
    nat.Kinv.push_back(std::move(Kinv));
  }
  return nat;
}

std::vector<CheckResult> check_defining_relations(const NatAction& nat) {
  const OrthoRank& rank = nat.rank;
  const int n = rank.n;
  const auto roots = simple_roots(rank);
  const auto cartan = cartan_matrix(rank);
  const SparseQMatrix id = SparseQMatrix::identity(rank.N);
  const FracScalar qdiff = FracScalar(LaurentPoly(Monomial::q_pow(1)) - LaurentPoly(Monomial::q_pow(-1)));
  std::vector<CheckResult> out;

  bool ok = true;
  for (int i = 0; i < n; ++i) {
    ok = ok && (nat.K[i] * nat.Kinv[i] == id);
    for (int j = 0; j < n; ++j) {
      FracScalar c = monomial_scalar(Monomial::s_pow(pairing_s_exp(roots[i], roots[j])));
      ok = ok && (nat.K[i] * nat.e[j] * nat.Kinv[i] == nat.e[j].scaled(c));
      ok = ok && (nat.K[i] * nat.f[j] * nat.Kinv[i] == nat.f[j].scaled(c.inverse()));
    }
  }
  out.push_back({"cartan_chevalley", ok, "q^h e_j q^-h = q^{(a_i,a_j)} e_j and the f analogue"});

  ok = true;
  std::ostringstream bad;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      SparseQMatrix comm = nat.e[i] * nat.f[j] - nat.f[j] * nat.e[i];
      SparseQMatrix expected = i == j ? (nat.K[i] - nat.Kinv[i]).scaled(qdiff.inverse()) : SparseQMatrix(rank.N, rank.N);
      if (comm != expected) {
        ok = false;
        bad << " (" << i + 1 << "," << j + 1 << ")";
      }
    }
  }
  out.push_back({"e_f_commutator", ok, ok ? "[e_i,f_j] = delta_ij (q^h - q^-h)/(q - q^-1)" : "fails at" + bad.str()});

  auto serre = [&](const std::vector<SparseQMatrix>& x, const std::string& name) {
    bool good = true;
    std::ostringstream where;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const int deg = 1 - cartan[i][j];
        const Monomial base = Monomial::s_pow(root_base_s_exp(rank, i));
        SparseQMatrix acc(rank.N, rank.N);
        for (int k = 0; k <= deg; ++k) {
          SparseQMatrix term = id;
          for (int a = 0; a < deg - k; ++a) term = term * x[i];
          term = term * x[j];
          for (int a = 0; a < k; ++a) term = term * x[i];
          FracScalar c = FracScalar(qbinom(deg, k, base));
          if (k % 2 == 1) c = -c;
          acc += term.scaled(c);
        }
        if (!is_zero_matrix(acc)) {
          good = false;
          where << " (" << i + 1 << "," << j + 1 << ")";
        }
      }
    }
    out.push_back({name, good, good ? "all pairs" : "fails at" + where.str()});
  };
  serre(nat.e, "serre_e");
  serre(nat.f, "serre_f");
  return out;
}

std::vector<int> nat_rho_twice(const OrthoRank& rank) {
  const WeightVec r = rho(rank);
  const int N = rank.N, n = rank.n;
  std::vector<int> out(N, 0);
  for (int k = 0; k < n; ++k) {
    out[k] = r.twice[k];
    out[N - 1 - k] = -r.twice[k];
  }
  return out;
}

SparseQMatrix flip_matrix(int N) {
  SparseQMatrix p(N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) p.set(i * N + j, j * N + i, FracScalar(1));
  return p;
}

SparseQMatrix rmatrix(const OrthoRank& rank) {
  const int N = rank.N;
  const auto rt = nat_rho_twice(rank);
  auto prime = [N](int i) { return N - 1 - i; };
  const FracScalar qdiff = FracScalar(LaurentPoly(Monomial::q_pow(1)) - LaurentPoly(Monomial::q_pow(-1)));
  SparseQMatrix r(N * N, N * N);
  auto idx = [N](int a, int b) { return a * N + b; };
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const int e = (i == j ? 1 : 0) - (i == prime(j) ? 1 : 0);
      r.add(idx(i, j), idx(i, j), monomial_scalar(Monomial::q_pow(e)));
    }
  }
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < i; ++j) {
      // e_ij (x) e_ji
      r.add(idx(i, j), idx(j, i), qdiff);
      // - q^{rho_i - rho_j} e_ij (x) e_{i'j'}
      const Monomial c = Monomial::s_pow(rt[i] - rt[j]);
      r.add(idx(i, prime(i)), idx(j, prime(j)), -(qdiff * monomial_scalar(c)));
    }
  }
  return r;
}

SparseQMatrix smatrix(const OrthoRank& rank) { return flip_matrix(rank.N) * rmatrix(rank); }

SparseQMatrix kappa(const OrthoRank& rank) {
  const int N = rank.N;
  const auto rt = nat_rho_twice(rank);
  SparseQMatrix k(N * N, N * N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      // e_{i'j} (x) e_{ij'}
      const int ip = N - 1 - i, jp = N - 1 - j;
      k.add(ip * N + i, j * N + jp, monomial_scalar(Monomial::s_pow(rt[i] - rt[j])));
    }
  }
  return k.scaled(k.trace().inverse());
}

SparseQMatrix on_legs12(const SparseQMatrix& x, int N) { return kron(x, SparseQMatrix::identity(N)); }
SparseQMatrix on_legs23(const SparseQMatrix& x, int N) { return kron(SparseQMatrix::identity(N), x); }
SparseQMatrix on_legs13(const SparseQMatrix& x, int N) {
  SparseQMatrix p23 = on_legs23(flip_matrix(N), N);
  return p23 * on_legs12(x, N) * p23;
}

CheckResult check_qybe(const OrthoRank& rank) {
  const int N = rank.N;
  const SparseQMatrix r = rmatrix(rank);
  SparseQMatrix r12 = on_legs12(r, N), r13 = on_legs13(r, N), r23 = on_legs23(r, N);
  SparseQMatrix residual = r12 * r13 * r23 - r23 * r13 * r12;
  std::ostringstream w;
  w << "nonzero entries in R12R13R23 - R23R13R12: " << residual.nonzeros();
  return {"qybe", residual.is_zero(), w.str()};
}

std::vector<CheckResult> check_reflection_relations(const OrthoRank& rank) {
  const int N = rank.N;
  const SparseQMatrix s = smatrix(rank);
  const SparseQMatrix s12 = on_legs12(s, N);
  const SparseQMatrix q23 = on_legs23(s * s, N);
  const SparseQMatrix k12 = on_legs12(kappa(rank), N);
  const FracScalar scalar = monomial_scalar(Monomial::q_pow(1 - N));
  std::vector<CheckResult> out;
  SparseQMatrix lhs = s12 * q23 * s12 * q23;
  SparseQMatrix rhs = q23 * s12 * q23 * s12;
  out.push_back({"reflection_equation", lhs == rhs,
                 "S12 Q23 S12 Q23 - Q23 S12 Q23 S12 has " + std::to_string((lhs - rhs).nonzeros()) + " nonzeros"});
  SparseQMatrix mid = q23 * s12 * q23;
  SparseQMatrix right = mid * k12 - k12.scaled(scalar);
  out.push_back({"kappa_relation_right", right.is_zero(),
                 "Q23 S12 Q23 kappa12 = q^{" + std::to_string(1 - N) + "} kappa12"});
  SparseQMatrix left = k12 * mid - k12.scaled(scalar);
  out.push_back({"kappa_relation_left", left.is_zero(),
                 "kappa12 Q23 S12 Q23 = q^{" + std::to_string(1 - N) + "} kappa12"});
  return out;
}

CheckResult check_s_spectrum(const OrthoRank& rank) {
  const int N = rank.N;
  const SparseQMatrix s = smatrix(rank);
  const SparseQMatrix id = SparseQMatrix::identity(N * N);
  const std::vector<FracScalar> ev = {monomial_scalar(Monomial::q_pow(1)),
                                      -monomial_scalar(Monomial::q_pow(-1)),
                                      monomial_scalar(Monomial::q_pow(1 - N))};
  std::vector<SparseQMatrix> factors;
  for (const auto& x : ev) factors.push_back(s - id.scaled(x));
  bool cubic = (factors[0] * factors[1] * factors[2]).is_zero();
  bool minimal = true;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if ((factors[a] * factors[b]).is_zero()) minimal = false;
  // S^2 then has eigenvalues q^2, q^-2, q^{2-2N}
  std::ostringstream w;
  w << "eigenvalues {q, -q^-1, q^" << 1 - N << "}; cubic annihilates: " << (cubic ? "yes" : "no")
    << "; all three needed: " << (minimal ? "yes" : "no");
  return {"s_three_eigenvalues", cubic && minimal, w.str()};
}

CheckResult check_kappa(const OrthoRank& rank) {
  const SparseQMatrix k = kappa(rank);
  const SparseQMatrix s = smatrix(rank);
  bool idem = k * k == k;
  int rk = k.rank();
  bool eig = s * k == k.scaled(monomial_scalar(Monomial::q_pow(1 - rank.N)));
  std::ostringstream w;
  w << "kappa^2 = kappa: " << (idem ? "yes" : "no") << "; rank " << rk
    << "; S kappa = q^{1-N} kappa: " << (eig ? "yes" : "no");
  return {"kappa_projector", idem && rk == 1 && eig, w.str()};
}

SparseQMatrix coproduct_f(const NatAction& nat, int i) {
  const int N = nat.rank.N;
  return kron(nat.f[i], nat.Kinv[i]) + kron(SparseQMatrix::identity(N), nat.f[i]);
}

SparseQMatrix coproduct_e(const NatAction& nat, int i) {
  const int N = nat.rank.N;
  return kron(nat.e[i], SparseQMatrix::identity(N)) + kron(nat.K[i], nat.e[i]);
}

SparseQMatrix r_adapted_rescaling(const OrthoRank& rank) {
  SparseQMatrix d = SparseQMatrix::identity(rank.N);
  if (rank.is_B())
    for (int k = rank.n + 1; k < rank.N; ++k) d.set(k, k, FracScalar(Monomial::s_pow(1)));
  return d;
}

NatAction r_adapted(const NatAction& nat) {
  const SparseQMatrix d = r_adapted_rescaling(nat.rank);
  SparseQMatrix dinv(nat.rank.N, nat.rank.N);
  for (int k = 0; k < nat.rank.N; ++k) dinv.set(k, k, d.at(k, k).inverse());
  NatAction out = nat;
  for (int i = 0; i < nat.rank.n; ++i) {
    out.f[i] = d * nat.f[i] * dinv;
    out.e[i] = d * nat.e[i] * dinv;
  }
  return out;
}

CheckResult check_s_invariance(const NatAction& nat_in) {
  const NatAction nat = r_adapted(nat_in);
  const SparseQMatrix s = smatrix(nat.rank);
  bool ok = true;
  std::ostringstream bad;
  for (int i = 0; i < nat.rank.n; ++i) {
    SparseQMatrix df = coproduct_f(nat, i), de = coproduct_e(nat, i);
    SparseQMatrix dk = kron(nat.K[i], nat.K[i]);
    if (s * df != df * s) ok = false, bad << " f" << i + 1;
    if (s * de != de * s) ok = false, bad << " e" << i + 1;
    if (s * dk != dk * s) ok = false, bad << " K" << i + 1;
  }
  return {"s_invariance", ok, ok ? "S commutes with Delta(e_i), Delta(f_i), Delta(q^h_i)" : "fails for" + bad.str()};
}

FracScalar qtrace(const SparseQMatrix& x, const OrthoRank& rank) {
  const auto rt = nat_rho_twice(rank);
  FracScalar t;
  for (int k = 0; k < rank.N; ++k) t += monomial_scalar(Monomial::s_pow(2 * rt[k])) * x.at(k, k);
  return t;
}

SparseQMatrix qtrace_leg1(const SparseQMatrix& x, const OrthoRank& rank) {
  const int N = rank.N;
  const auto rt = nat_rho_twice(rank);
  SparseQMatrix out(N, N);
  for (int i = 0; i < N; ++i) {
    const FracScalar w = monomial_scalar(Monomial::s_pow(2 * rt[i]));
    for (int j = 0; j < N; ++j)
      for (const auto& [col, v] : x.row(i * N + j).entries())
        if (col / N == i) out.add(j, col % N, w * v);
  }
  return out;
}

}  // namespace qclass
