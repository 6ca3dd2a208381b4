// Runs the acceptance criteria and prints one line per criterion.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <functional>
#include <iostream>
#include <sstream>

#include "qclass/natrep.hpp"
#include "qclass/singular.hpp"
#include "qclass/spectra.hpp"
#include "qclass/tensor.hpp"

using namespace qclass;

namespace {

ClassData symmetric(int N) { return ClassData::make(N, {}, 2, N / 2 - 2); }
ClassData nine_l1() { return ClassData::make(9, {1}, 2, 1); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    pass = false;
    note << why << "; ";
  }
};

bool all_pass(const std::vector<Outcome>& os, Verdict& v, const std::string& where) {
  bool ok = true;
  for (const auto& o : os)
    if (o.status == Status::Fail) {
      ok = false;
      v.fail(where + " " + o.id + " (" + o.witness + ")");
    }
  return ok;
}

Verdict c1_rmatrix() {
  Verdict v;
  for (int N : {5, 7, 8, 9}) {
    const auto t0 = std::chrono::steady_clock::now();
    const OrthoRank r = OrthoRank::from_N(N);
    const std::string tag = "N=" + std::to_string(N);
    if (!check_qybe(r).pass) v.fail(tag + " QYBE");
    if (!check_s_spectrum(r).pass) v.fail(tag + " S spectrum");
    if (!check_kappa(r).pass) v.fail(tag + " kappa");
    for (const auto& c : check_reflection_relations(r))
      if (!c.pass) v.fail(tag + " " + c.name);
    const double t = seconds_since(t0);
    if (N == 9) {
      v.note << "N=9 in " << t << " s; ";
      if (t > 120) v.fail("N=9 over 120 s");
    }
  }
  return v;
}

Verdict c2_dimensions() {
  Verdict v;
  for (int N : {5, 7, 8, 9}) {
    const auto cls = symmetric(N);
    ParabolicVerma M(cls, ParamAssignment::make(cls, ParamMode::Generic));
    const Beta delta = delta_coords(cls);
    const int d = M.dim(delta);
    const int ker = static_cast<int>(M.common_kernel(delta, {0}).size());
    v.note << "N=" << N << ": dim " << d << ", ker e_1 " << ker << "; ";
    if (d != N - 3) v.fail("dim at lambda-delta for N=" + std::to_string(N));
    if (ker != cls.n() - 1) v.fail("ker e_1 for N=" + std::to_string(N));
  }
  return v;
}

Verdict c3_lemmas() {
  Verdict v;
  for (int N : {5, 7, 8, 9}) {
    const auto cls = symmetric(N);
    const auto cs = build_constructions(cls);
    ParabolicVerma M(cls, ParamAssignment::make(cls, ParamMode::Specialized));
    int passed = 0, skipped = 0;
    for (const auto& name : lemma_names()) {
      const Outcome o = verify_lemma(name, cs, M);
      if (o.status == Status::Fail) v.fail("N=" + std::to_string(N) + " " + name + " (" + o.witness + ")");
      if (o.status == Status::Pass) ++passed;
      if (o.status == Status::Skipped) ++skipped;
      if (N == 5 && name == "y_zero" && o.status != Status::Skipped) v.fail("so(5) y_2 != 0 not reproduced");
      if (N != 5 && name == "y_zero" && o.status != Status::Pass) v.fail("y_k = 0 for N=" + std::to_string(N));
    }
    v.note << "N=" << N << ": " << passed << " pass, " << skipped << " n/a; ";
  }
  return v;
}

Verdict c4_singular() {
  Verdict v;
  for (int N : {5, 7, 8, 9})
    for (auto mode : {ParamMode::Specialized, ParamMode::Generic})
      all_pass(verify_singular(symmetric(N), mode), v, "N=" + std::to_string(N) + " " + mode_name(mode));
  const auto cls = nine_l1();
  const auto cs = build_constructions(cls);
  ParabolicVerma M(cls, ParamAssignment::make(cls, ParamMode::Specialized));
  const SparseVec x = M.coords(cs.v_singular);
  bool killed = !x.is_zero();
  for (int i = 0; i < cls.n(); ++i) killed = killed && M.apply_e(i, cs.delta, x).is_zero();
  if (!killed) v.fail("so(9) l=1 raising operators");
  v.note << "so(9) l=1: all " << cls.n() << " simple raising operators give 0; ";
  return v;
}

Verdict c5_tensor() {
  Verdict v;
  for (const auto& cls : {symmetric(7), symmetric(8), nine_l1()}) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& o : verify_filtration(cls, ParamMode::Specialized))
      if (o.id == "degree_reduction") {
        if (o.status != Status::Pass) v.fail(cls.str() + " " + o.witness);
        v.note << cls.str() << ": " << o.witness << "; ";
      }
    if (seconds_since(t0) > 600) v.fail(cls.str() + " over 10 min");
  }
  for (int N : {5, 7, 8}) {
    const auto t0 = std::chrono::steady_clock::now();
    all_pass(verify_span(symmetric(N), ParamMode::Specialized), v, "span N=" + std::to_string(N));
    if (seconds_since(t0) > 600) v.fail("span over 10 min");
  }
  return v;
}

Verdict c6_u_nu2() {
  Verdict v;
  for (int N : {7, 8}) {
    for (const auto& o : verify_u_nu2_congruence(symmetric(N), ParamMode::Specialized)) {
      if (o.status != Status::Pass) v.fail("N=" + std::to_string(N) + " " + o.id);
      if (o.id == "u_nu2_congruence") v.note << "N=" << N << ": " << o.witness << "; ";
    }
  }
  return v;
}

Verdict c7_anchor() {
  Verdict v;
  for (int N : {5, 7, 8}) {
    const OrthoRank r = OrthoRank::from_N(N);
    HighestWeight hw(r, WeightVec::eps(r.n, 1));
    const Monomial a = hw_eigenvalue(hw, WeightVec::eps(r.n, 1));
    const Monomial b = hw_eigenvalue(hw, WeightVec::eps(r.n, 2));
    const Monomial c = hw_eigenvalue(hw, -1 * WeightVec::eps(r.n, 1));
    if (!(a == Monomial::q_pow(2) && b == Monomial::q_pow(-2) && c == Monomial::q_pow(2 - 2 * N)))
      v.fail("hw eigenvalues N=" + std::to_string(N));
    // The roots of S^2 are the squares of the roots q, -q^-1, q^{1-N} of S.
    if (!check_s_spectrum(r).pass) v.fail("S spectrum N=" + std::to_string(N));
    const SparseQMatrix S2 = smatrix(r) * smatrix(r);
    SparseQMatrix P = S2;
    for (int k = 1; k <= 2; ++k) {
      if (!(qtrace_leg1(P, r) == SparseQMatrix::identity(N).scaled(central_character(hw, k))))
        v.fail("q-trace N=" + std::to_string(N) + " k=" + std::to_string(k));
      P = P * S2;
    }
  }
  if (v.pass) v.note << "S^2 roots {q^2, q^-2, q^{2-2N}} and q-traces k = 1, 2 agree for N = 5, 7, 8";
  return v;
}

Verdict c8_degree() {
  Verdict v;
  for (const auto& cls : {symmetric(5), symmetric(7), symmetric(8), symmetric(9), nine_l1()}) {
    const auto param = ParamAssignment::make(cls, ParamMode::Specialized);
    const auto q = q_eigenvalues(cls, param, true);
    if (static_cast<int>(q.size()) != 2 * cls.ell() + 2) v.fail(cls.str() + " root count");
    if (!pairwise_distinct(q)) v.fail(cls.str() + " roots not distinct");
    std::vector<Monomial> lim, cl = min_poly(cls, param, PolyMode::Classical);
    for (const auto& e : q) lim.push_back(classical_limit(e.value));
    std::sort(lim.begin(), lim.end());
    std::sort(cl.begin(), cl.end());
    if (lim != cl) v.fail(cls.str() + " classical limit");
  }
  if (v.pass) v.note << "2l+2 distinct roots with the classical limit for 5 classes";
  return v;
}

Verdict c9_limits() {
  Verdict v;
  double worst = 0;
  for (const auto& cls : {symmetric(8), nine_l1()}) {
    std::vector<GaussianRational> zeta(cls.ell(), GaussianRational(mpq_class(3, 2)));
    for (int k = 1; k <= 4; ++k) {
      const LimitResult r = trace_limit(cls, zeta, k);
      worst = std::max(worst, r.rel_error);
      if (r.rel_error > 1e-6) v.fail(cls.str() + " k=" + std::to_string(k));
    }
  }
  v.note << "worst relative error " << worst;
  return v;
}

Verdict c10_ideal() {
  Verdict v;
  const auto cls = symmetric(8);
  const IdealCheck ic = classical_ideal_check(cls, classical_point(cls, {}));
  if (!ic.group_relation) v.fail("o C o^t != C");
  if (!ic.min_poly) v.fail("minimal polynomial");
  if (!ic.traces) v.fail("traces");
  if (ic.jacobian_rank != 48 || ic.expected_rank != 48) v.fail("Jacobian rank");
  v.note << "Jacobian rank " << ic.jacobian_rank << " (expected " << ic.expected_rank << ")";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"R-matrix layer", c1_rmatrix},
      {"Verma dimensions", c2_dimensions},
      {"lemma suite", c3_lemmas},
      {"singular vector", c4_singular},
      {"tensor filtration", c5_tensor},
      {"u_nu2 congruence", c6_u_nu2},
      {"spectrum anchor", c7_anchor},
      {"quantum/classical degree reduction", c8_degree},
      {"classical limit of traces", c9_limits},
      {"classical ideal", c10_ideal},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << index << ". " << name << " [" << std::fixed
              << std::setprecision(1) << seconds_since(t0) << " s]: " << v.note.str() << std::endl;
  }
  std::cout << (10 - failed) << "/10 criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
