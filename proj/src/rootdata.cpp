#include "qclass/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qclass {

OrthoRank OrthoRank::from_N(int N) {
  if (N < 5 || N == 6) throw std::invalid_argument("N must be 5 or at least 7");
  OrthoRank r;
  r.N = N;
  r.n = N / 2;
  r.series = N % 2 == 1 ? Series::B : Series::D;
  return r;
}

WeightVec WeightVec::eps(int n, int i) {
  WeightVec w(n);
  w.twice.at(i - 1) = 2;
  return w;
}

WeightVec WeightVec::from_ints(const std::vector<int>& coords) {
  WeightVec w;
  for (int c : coords) w.twice.push_back(2 * c);
  return w;
}

bool WeightVec::is_zero() const {
  return std::all_of(twice.begin(), twice.end(), [](int x) { return x == 0; });
}

bool WeightVec::integral() const {
  return std::all_of(twice.begin(), twice.end(), [](int x) { return x % 2 == 0; });
}

int WeightVec::coord(int i) const {
  int t = twice.at(i - 1);
  if (t % 2 != 0) throw std::logic_error("half-integral coordinate");
  return t / 2;
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  if (twice.empty()) twice.assign(o.twice.size(), 0);
  for (std::size_t k = 0; k < o.twice.size(); ++k) twice.at(k) += o.twice[k];
  return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
  if (twice.empty()) twice.assign(o.twice.size(), 0);
  for (std::size_t k = 0; k < o.twice.size(); ++k) twice.at(k) -= o.twice[k];
  return *this;
}

WeightVec operator*(int k, WeightVec a) {
  for (int& x : a.twice) x *= k;
  return a;
}

std::string WeightVec::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < twice.size(); ++k) {
    if (k) out << ",";
    if (twice[k] % 2 == 0) out << twice[k] / 2;
    else out << twice[k] << "/2";
  }
  out << ")";
  return out.str();
}

int pairing4(const WeightVec& x, const WeightVec& y) {
  if (x.twice.size() != y.twice.size()) throw std::logic_error("weight rank mismatch");
  return std::inner_product(x.twice.begin(), x.twice.end(), y.twice.begin(), 0);
}

int pairing_s_exp(const WeightVec& x, const WeightVec& y) {
  int p4 = pairing4(x, y);
  if (p4 % 2 != 0) throw std::logic_error("pairing is not a multiple of 1/2");
  return p4 / 2;
}

std::vector<WeightVec> simple_roots(const OrthoRank& rank) {
  const int n = rank.n;
  std::vector<WeightVec> out;
  for (int i = 1; i < n; ++i) out.push_back(WeightVec::eps(n, i) - WeightVec::eps(n, i + 1));
  if (rank.is_B()) out.push_back(WeightVec::eps(n, n));
  else out.push_back(WeightVec::eps(n, n - 1) + WeightVec::eps(n, n));
  return out;
}

std::vector<std::vector<int>> cartan_matrix(const OrthoRank& rank) {
  auto a = simple_roots(rank);
  std::vector<std::vector<int>> c(rank.n, std::vector<int>(rank.n));
  for (int i = 0; i < rank.n; ++i)
    for (int j = 0; j < rank.n; ++j) c[i][j] = 2 * pairing4(a[i], a[j]) / pairing4(a[i], a[i]);
  return c;
}

WeightVec rho(const OrthoRank& rank) {
  WeightVec r(rank.n);
  // doubled rho_1 = 2n-1 (B) or 2n-2 (D)
  const int top = rank.is_B() ? 2 * rank.n - 1 : 2 * rank.n - 2;
  for (int i = 0; i < rank.n; ++i) r.twice[i] = top - 2 * i;
  return r;
}

std::vector<WeightVec> positive_roots(const OrthoRank& rank) {
  const int n = rank.n;
  std::vector<WeightVec> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(WeightVec::eps(n, i) - WeightVec::eps(n, j));
      out.push_back(WeightVec::eps(n, i) + WeightVec::eps(n, j));
    }
    if (rank.is_B()) out.push_back(WeightVec::eps(n, i));
  }
  return out;
}

std::vector<int> simple_coords(const OrthoRank& rank, const WeightVec& x) {
  const int n = rank.n;
  if (!x.integral()) throw std::logic_error("not in the root lattice");
  std::vector<int> c(n);
  int acc = 0;
  if (rank.is_B()) {
    for (int k = 1; k <= n; ++k) c[k - 1] = (acc += x.coord(k));
    return c;
  }
  for (int k = 1; k <= n - 2; ++k) c[k - 1] = (acc += x.coord(k));
  const int base = n >= 3 ? c[n - 3] : 0;
  const int plus = x.coord(n - 1) + base + x.coord(n);
  const int minus = x.coord(n - 1) + base - x.coord(n);
  if (plus % 2 != 0) throw std::logic_error("not in the root lattice");
  c[n - 1] = plus / 2;
  c[n - 2] = minus / 2;
  return c;
}

WeightVec from_simple_coords(const OrthoRank& rank, const std::vector<int>& c) {
  auto a = simple_roots(rank);
  WeightVec w(rank.n);
  for (int i = 0; i < rank.n; ++i) w += c.at(i) * a[i];
  return w;
}

int root_base_s_exp(const OrthoRank& rank, int i) {
  return (rank.is_B() && i == rank.n - 1) ? 1 : 2;
}

// ---------------------------------------------------------------------------

ClassData ClassData::make(int N, std::vector<int> gl_blocks, int m, int p) {
  ClassData c{N, std::move(gl_blocks), m, p};
  if (auto err = c.validate()) throw ClassDataError(*err);
  return c;
}

std::optional<ValidationError> ClassData::validate() const {
  if (N < 5 || N == 6) return ValidationError{"N", "N = 5 or N >= 7", "unsupported N = " + std::to_string(N)};
  if (ell() > kMaxBlocks)
    return ValidationError{"gl_blocks", "at most " + std::to_string(kMaxBlocks) + " blocks",
                           "too many gl blocks"};
  for (int b : gl_blocks)
    if (b < 1) return ValidationError{"gl_blocks", "n_i >= 1", "block size must be positive"};
  if (m < 2) return ValidationError{"m", "m >= 2", "m = " + std::to_string(m)};
  if (N % 2 == 0 && p < 2)
    return ValidationError{"p", "p >= 2 for even N", "p = " + std::to_string(p)};
  if (p < 0) return ValidationError{"p", "p >= 0", "p = " + std::to_string(p)};
  const int sum = std::accumulate(gl_blocks.begin(), gl_blocks.end(), 0) + m + p;
  if (sum != n())
    return ValidationError{"gl_blocks", "n_1 + ... + n_l + m + p = n",
                           "sizes add up to " + std::to_string(sum) + ", expected " + std::to_string(n())};
  return std::nullopt;
}

std::vector<int> ClassData::block_sizes() const {
  std::vector<int> s = gl_blocks;
  s.push_back(m);
  s.push_back(p);
  return s;
}

int ClassData::block_of(int j) const {
  int end = 0, b = 0;
  for (int sz : block_sizes()) {
    ++b;
    end += sz;
    if (j <= end) return b;
  }
  throw std::out_of_range("epsilon index out of range");
}

std::set<int> ClassData::non_levi_indices() const {
  std::set<int> out;
  int acc = 0;
  for (int b : gl_blocks) out.insert(acc += b);
  out.insert(n() - p);
  return out;
}

std::set<int> ClassData::levi_simple_indices() const {
  std::set<int> out;
  auto non = non_levi_indices();
  for (int i = 1; i <= n(); ++i)
    if (!non.count(i)) out.insert(i);
  return out;
}

std::string ClassData::str() const {
  std::ostringstream out;
  out << "so(" << N << ") blocks=[";
  for (std::size_t k = 0; k < gl_blocks.size(); ++k) out << (k ? "," : "") << gl_blocks[k];
  out << "] m=" << m << " p=" << p;
  return out.str();
}

std::vector<int> delta_coords(const ClassData& cls) {
  const int n = cls.n(), p = cls.p;
  std::vector<int> c(n, 0);
  c[n - p - 2] = 1;
  if (cls.N % 2 == 1) {
    for (int i = n - p; i <= n; ++i) c[i - 1] = 2;
  } else {
    for (int i = n - p; i <= n - 2; ++i) c[i - 1] = 2;
    c[n - 2] = 1;
    c[n - 1] = 1;
  }
  return c;
}

WeightVec delta(const ClassData& cls) { return from_simple_coords(cls.rank(), delta_coords(cls)); }

int height(const std::vector<int>& coords) { return std::accumulate(coords.begin(), coords.end(), 0); }

long kostant_dim(const ClassData& cls, const std::vector<int>& beta) {
  const OrthoRank rank = cls.rank();
  const auto levi = cls.levi_simple_indices();
  std::vector<std::vector<int>> roots;
  for (const auto& r : positive_roots(rank)) {
    auto c = simple_coords(rank, r);
    bool in_levi = true;
    for (int i = 0; i < rank.n; ++i)
      if (c[i] != 0 && !levi.count(i + 1)) in_levi = false;
    if (!in_levi) roots.push_back(c);
  }
  std::map<std::pair<std::size_t, std::vector<int>>, long> memo;
  std::function<long(std::size_t, const std::vector<int>&)> count =
      [&](std::size_t idx, const std::vector<int>& rem) -> long {
    if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) return 1;
    if (idx == roots.size()) return 0;
    auto key = std::make_pair(idx, rem);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long total = count(idx + 1, rem);
    std::vector<int> next = rem;
    bool ok = true;
    for (std::size_t k = 0; k < next.size(); ++k)
      if ((next[k] -= roots[idx][k]) < 0) ok = false;
    if (ok) total += count(idx, next);
    memo.emplace(key, total);
    return total;
  };
  for (int b : beta)
    if (b < 0) return 0;
  return count(0, beta);
}

// ---------------------------------------------------------------------------

ParamAssignment ParamAssignment::make(const ClassData& cls, ParamMode mode) {
  ParamAssignment a;
  a.mode = mode;
  for (int b = 0; b < cls.ell(); ++b) a.block_base.push_back(Monomial::z_pow(b, 1));
  if (mode == ParamMode::Generic) a.block_base.push_back(Monomial::t_pow(1));
  else a.block_base.push_back(Monomial::i_unit() * Monomial::s_pow(-cls.P()));
  a.block_base.push_back(Monomial::one());
  return a;
}

HighestWeight::HighestWeight(const ClassData& cls, ParamAssignment param)
    : rank_(cls.rank()), roots_(simple_roots(rank_)), cls_(cls), param_(std::move(param)) {}

HighestWeight::HighestWeight(const OrthoRank& rank, WeightVec lambda)
    : rank_(rank), roots_(simple_roots(rank)), lambda_(std::move(lambda)) {}

Monomial HighestWeight::pair(const WeightVec& x) const {
  if (lambda_) return Monomial::s_pow(pairing_s_exp(*lambda_, x));
  Monomial r;
  for (int j = 1; j <= rank_.n; ++j) {
    const int c = x.coord(j);
    if (c != 0) r = r * param_.block_base.at(cls_->block_of(j) - 1).pow(c);
  }
  return r;
}

Monomial HighestWeight::cartan(int i, const std::vector<int>& beta) const {
  const WeightVec& a = roots_.at(i);
  int shift = 0;
  for (int k = 0; k < rank_.n; ++k)
    if (beta[k] != 0) shift += beta[k] * pairing_s_exp(a, roots_[k]);
  return pair(a) * Monomial::s_pow(-shift);
}

std::vector<Monomial> mu_vector(const ClassData& cls, const ParamAssignment& param) {
  std::vector<Monomial> mu;
  const auto sizes = cls.block_sizes();
  int acc = 0;
  for (int i = 0; i < cls.ell() + 2; ++i) {
    mu.push_back(param.block_base.at(i).pow(2) * Monomial::q_pow(-2 * acc));
    acc += sizes[i];
  }
  return mu;
}

std::string mode_name(ParamMode mode) { return mode == ParamMode::Generic ? "generic" : "specialized"; }

}  // namespace qclass
