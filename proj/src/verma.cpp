#include "qclass/verma.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qclass {

int word_length_cap() {
  if (const char* env = std::getenv("QCLASS_CAP_WORDLEN")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
  }
  return 12;
}

namespace {

bool valid(const Beta& b) {
  return std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; });
}

bool dominates(const Beta& a, const Beta& b) {  // a - b >= 0
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

Beta minus(Beta a, const Beta& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

Beta with_step(Beta b, int i, int step) {
  b[i] += step;
  return b;
}

SparseVec shifted(const SparseVec& v, int offset) {
  std::map<int, FracScalar> m;
  for (const auto& [k, x] : v.entries()) m.emplace(k + offset, x);
  return SparseVec::from_map(m);
}

}  // namespace

Beta word_offset(const OrthoRank& rank, const Word& w) {
  Beta b(rank.n, 0);
  for (int a : w) {
    if (a < 1 || a > rank.n) throw std::invalid_argument("letter out of range");
    ++b[a - 1];
  }
  return b;
}

WordVector::WordVector(Word w, FracScalar c) {
  if (!c.is_zero()) terms.emplace(std::move(w), std::move(c));
}

void WordVector::add(const Word& w, const FracScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

WordVector& WordVector::operator+=(const WordVector& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

WordVector& WordVector::operator-=(const WordVector& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

WordVector WordVector::scaled(const FracScalar& c) const {
  WordVector r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms) r.terms.emplace(w, x * c);
  return r;
}

Beta WordVector::offset(const OrthoRank& rank) const {
  if (terms.empty()) throw std::invalid_argument("offset of the zero vector");
  Beta b = word_offset(rank, terms.begin()->first);
  for (const auto& [w, c] : terms)
    if (word_offset(rank, w) != b) throw std::invalid_argument("word vector is not homogeneous");
  return b;
}

std::string WordVector::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int a : w) os << " f" << a;
    os << " v";
  }
  return os.str();
}

WordVector left_mul(const Word& u, const WordVector& v) {
  WordVector r;
  for (const auto& [w, c] : v.terms) {
    Word x = u;
    x.insert(x.end(), w.begin(), w.end());
    r.add(x, c);
  }
  return r;
}

WordVector qcommutator_apply(int x, int y, const FracScalar& a, const WordVector& v) {
  return left_mul({x, y}, v) - left_mul({y, x}, v).scaled(a);
}

std::vector<Word> enumerate_words(const OrthoRank& rank, const Beta& beta, int cap) {
  if (static_cast<int>(beta.size()) != rank.n || !valid(beta)) throw std::invalid_argument("offset is not in the positive cone");
  const int len = height(beta);
  if (len > cap) {
    throw ResourceError("word length " + std::to_string(len) + " exceeds the cap " + std::to_string(cap));
  }
  std::vector<Word> out;
  Word cur;
  Beta rem = beta;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < rank.n; ++i) {
      if (rem[i] == 0) continue;
      --rem[i];
      cur.push_back(i + 1);
      self(self);
      cur.pop_back();
      ++rem[i];
    }
  };
  rec(rec);
  return out;
}

std::vector<WordVector> serre_relations(const OrthoRank& rank) {
  const auto a = cartan_matrix(rank);
  std::vector<WordVector> out;
  for (int i = 0; i < rank.n; ++i) {
    for (int j = 0; j < rank.n; ++j) {
      if (i == j) continue;
      if (a[i][j] == 0) {
        if (i < j) out.push_back(WordVector({i + 1, j + 1}) - WordVector({j + 1, i + 1}));
        continue;
      }
      const int deg = 1 - a[i][j];
      const Monomial base = Monomial::s_pow(root_base_s_exp(rank, i));
      WordVector rel;
      for (int k = 0; k <= deg; ++k) {
        Word w(deg - k, i + 1);
        w.push_back(j + 1);
        w.insert(w.end(), k, i + 1);
        FracScalar c(qbinom(deg, k, base));
        rel.add(w, k % 2 == 1 ? -c : c);
      }
      out.push_back(rel);
    }
  }
  return out;
}

WordVector apply_e_words(const HighestWeight& hw, int i, const WordVector& v) {
  const OrthoRank& rank = hw.rank();
  WordVector r;
  for (const auto& [w, c] : v.terms) {
    Beta right(rank.n, 0);
    for (int t = static_cast<int>(w.size()) - 1; t >= 0; --t) {
      if (w[t] == i) {
        Word shorter = w;
        shorter.erase(shorter.begin() + t);
        r.add(shorter, c * gauss_bracket(hw.cartan(i - 1, right)));
      }
      ++right[w[t] - 1];
    }
  }
  return r;
}

FracScalar shapovalov(const HighestWeight& hw, const Word& x, const Word& y) {
  const OrthoRank& rank = hw.rank();
  if (word_offset(rank, x) != word_offset(rank, y)) return FracScalar(0);
  WordVector v(y);
  for (int letter : x) {
    v = apply_e_words(hw, letter, v);
    if (v.is_zero()) return FracScalar(0);
  }
  auto it = v.terms.find(Word{});
  return it == v.terms.end() ? FracScalar(0) : it->second;
}

// ---------------------------------------------------------------------------

SparseVec WeightModule::apply_f(int i, const Beta& beta, const SparseVec& x) {
  return f_matrix(i, with_step(beta, i, 1)).apply(x);
}

SparseVec WeightModule::apply_e(int i, const Beta& beta, const SparseVec& x) {
  return e_matrix(i, beta).apply(x);
}

WordVector WeightModule::normal_form(const WordVector& v) {
  if (v.is_zero()) return v;
  const Beta beta = v.offset(rank());
  return to_words(beta, coords(v));
}

std::vector<SparseVec> WeightModule::common_kernel(const Beta& beta, const std::vector<int>& which) {
  const int d = dim(beta);
  std::vector<SparseVec> rows;
  for (int i : which) {
    if (beta[i] == 0) continue;
    SparseQMatrix e = e_matrix(i, beta);
    for (int r = 0; r < e.rows(); ++r)
      if (!e.row(r).is_zero()) rows.push_back(e.row(r));
  }
  return kernel(rows, d);
}

std::vector<SparseVec> WeightModule::singular_space(const Beta& beta) {
  std::vector<int> all(rank().n);
  for (int i = 0; i < rank().n; ++i) all[i] = i;
  return common_kernel(beta, all);
}

// ---------------------------------------------------------------------------

ParabolicVerma::ParabolicVerma(const ClassData& cls, ParamAssignment param, int cap)
    : rank_(cls.rank()), hw_(cls, std::move(param)), levi_(cls.levi_simple_indices()), cap_(cap) {
  serre_ = serre_relations(rank_);
  for (const auto& s : serre_) serre_offsets_.push_back(s.offset(rank_));
}

ParabolicVerma::ParabolicVerma(const OrthoRank& rank, WeightVec lambda, std::set<int> levi, int cap)
    : rank_(rank), hw_(rank, std::move(lambda)), levi_(std::move(levi)), cap_(cap) {
  serre_ = serre_relations(rank_);
  for (const auto& s : serre_) serre_offsets_.push_back(s.offset(rank_));
}

ParabolicVerma::Space& ParabolicVerma::space(const Beta& beta) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (auto it = cache_.find(beta); it != cache_.end()) return *it->second;
  auto sp = build(beta);
  return *cache_.emplace(beta, std::move(sp)).first->second;
}

std::unique_ptr<ParabolicVerma::Space> ParabolicVerma::build(const Beta& beta) {
  const int n = rank_.n;
  auto sp = std::make_unique<Space>();
  sp->f.resize(n);
  sp->e.resize(n);
  const int h = height(beta);
  if (h > cap_) {
    throw ResourceError("weight offset of height " + std::to_string(h) + " exceeds the word-length cap " +
                        std::to_string(cap_));
  }
  if (h == 0) {
    sp->dim = 1;
    sp->words = {Word{}};
    return sp;
  }
  std::vector<int> off(n, -1);
  std::vector<Space*> lower(n, nullptr);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    if (beta[i] == 0) continue;
    lower[i] = &space(with_step(beta, i, -1));
    off[i] = total;
    total += lower[i]->dim;
  }

  Echelon rel;
  if (h == 1) {
    for (int i = 0; i < n; ++i)
      if (beta[i] == 1 && levi_.count(i + 1)) rel.insert(SparseVec::unit(off[i]));
  }
  for (std::size_t s = 0; s < serre_.size(); ++s) {
    if (!dominates(beta, serre_offsets_[s])) continue;
    const Beta rest = minus(beta, serre_offsets_[s]);
    const int d = space(rest).dim;
    for (int r = 0; r < d; ++r) {
      SparseVec row;
      for (const auto& [w, c] : serre_[s].terms) {
        SparseVec x = SparseVec::unit(r);
        Beta cur = rest;
        for (std::size_t t = w.size() - 1; t >= 1 && !x.is_zero(); --t) {
          cur[w[t] - 1] += 1;
          x = space(cur).f[w[t] - 1].apply(x);
        }
        if (!x.is_zero()) row.axpy(c, shifted(x, off[w[0] - 1]));
      }
      if (!row.is_zero()) rel.insert(row);
    }
  }
  rel.make_reduced();
  sp->relation_rank = rel.rank();

  std::map<int, int> position;
  for (int i = 0; i < n; ++i) {
    if (!lower[i]) continue;
    for (int r = 0; r < lower[i]->dim; ++r) {
      const int col = off[i] + r;
      if (rel.has_pivot(col)) continue;
      position[col] = sp->dim++;
      Word w{i + 1};
      const Word& tail = lower[i]->words[r];
      w.insert(w.end(), tail.begin(), tail.end());
      sp->words.push_back(std::move(w));
      sp->origin.emplace_back(i, r);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!lower[i]) continue;
    SparseQMatrix m(sp->dim, lower[i]->dim);
    for (int r = 0; r < lower[i]->dim; ++r) {
      SparseVec res = rel.reduce(SparseVec::unit(off[i] + r));
      for (const auto& [col, x] : res.entries()) m.set(position.at(col), r, x);
    }
    sp->f[i] = std::move(m);
  }
  return sp;
}

int ParabolicVerma::dim(const Beta& beta) {
  if (!valid(beta)) return 0;
  return space(beta).dim;
}

const std::vector<Word>& ParabolicVerma::basis_words(const Beta& beta) { return space(beta).words; }

int ParabolicVerma::relation_rank(const Beta& beta) { return space(beta).relation_rank; }

std::size_t ParabolicVerma::cached_spaces() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return cache_.size();
}

SparseQMatrix ParabolicVerma::f_matrix(int i, const Beta& beta) {
  const Beta low = with_step(beta, i, -1);
  if (!valid(low)) return SparseQMatrix(dim(beta), 0);
  return space(beta).f[i];
}

const SparseQMatrix& ParabolicVerma::e_ref(int i, const Beta& beta) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  Space& sp = space(beta);
  if (sp.e[i]) return *sp.e[i];
  const Beta low = with_step(beta, i, -1);
  SparseQMatrix m(dim(low), sp.dim);
  if (valid(low)) {
    for (int k = 0; k < sp.dim; ++k) {
      const auto [j, r] = sp.origin[k];
      const Beta below = with_step(beta, j, -1);
      SparseVec col;
      const Beta both = with_step(below, i, -1);
      if (valid(both)) {
        SparseVec x = e_ref(i, below).apply(SparseVec::unit(r));
        if (!x.is_zero()) col = space(low).f[j].apply(x);
      }
      if (j == i) col.axpy(gauss_bracket(hw_.cartan(i, below)), SparseVec::unit(r));
      for (const auto& [row, x] : col.entries()) m.set(row, k, x);
    }
  }
  sp.e[i] = std::move(m);
  return *sp.e[i];
}

SparseQMatrix ParabolicVerma::e_matrix(int i, const Beta& beta) {
  if (!valid(beta)) return SparseQMatrix(0, 0);
  return e_ref(i, beta);
}

SparseVec ParabolicVerma::apply_f(int i, const Beta& beta, const SparseVec& x) {
  if (x.is_zero()) return x;
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return space(with_step(beta, i, 1)).f[i].apply(x);
}

SparseVec ParabolicVerma::apply_e(int i, const Beta& beta, const SparseVec& x) {
  if (x.is_zero() || beta[i] == 0) return {};
  return e_ref(i, beta).apply(x);
}

SparseVec ParabolicVerma::word_coords(const Word& w) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (auto it = word_cache_.find(w); it != word_cache_.end()) return it->second;
  SparseVec x;
  if (w.empty()) {
    x = SparseVec::unit(0);
  } else {
    const Word tail(w.begin() + 1, w.end());
    SparseVec t = word_coords(tail);
    if (!t.is_zero()) x = space(word_offset(rank_, w)).f[w.front() - 1].apply(t);
  }
  word_cache_.emplace(w, x);
  return x;
}

SparseVec ParabolicVerma::coords(const WordVector& v) {
  SparseVec x;
  if (v.is_zero()) return x;
  (void)v.offset(rank_);
  for (const auto& [w, c] : v.terms) x.axpy(c, word_coords(w));
  return x;
}

WordVector ParabolicVerma::to_words(const Beta& beta, const SparseVec& x) {
  WordVector r;
  if (x.is_zero()) return r;
  const auto& words = space(beta).words;
  for (const auto& [k, c] : x.entries()) r.add(words.at(k), c);
  return r;
}

// ---------------------------------------------------------------------------

VermaQuotient::VermaQuotient(std::shared_ptr<ParabolicVerma> base, Beta gamma, SparseVec generator)
    : base_(std::move(base)), gamma_(std::move(gamma)), generator_(std::move(generator)) {}

VermaQuotient::Part& VermaQuotient::part(const Beta& beta) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (auto it = cache_.find(beta); it != cache_.end()) return *it->second;
  auto p = std::make_unique<Part>();
  if (dominates(beta, gamma_)) {
    if (beta == gamma_) p->sub.insert(generator_);
    for (int i = 0; i < rank().n; ++i) {
      const Beta low = with_step(beta, i, -1);
      if (!dominates(low, gamma_)) continue;
      Part& lp = part(low);
      for (const auto& [piv, row] : lp.sub.rows()) p->sub.insert(base_->apply_f(i, low, row));
    }
    p->sub.make_reduced();
  }
  const int d = base_->dim(beta);
  for (int c = 0; c < d; ++c) {
    if (p->sub.has_pivot(c)) continue;
    p->position[c] = static_cast<int>(p->free_cols.size());
    p->free_cols.push_back(c);
  }
  return *cache_.emplace(beta, std::move(p)).first->second;
}

const Echelon& VermaQuotient::submodule(const Beta& beta) { return part(beta).sub; }

int VermaQuotient::dim(const Beta& beta) {
  if (!valid(beta)) return 0;
  return static_cast<int>(part(beta).free_cols.size());
}

SparseVec VermaQuotient::project(const Beta& beta, const SparseVec& x) {
  Part& p = part(beta);
  SparseVec r = p.sub.reduce(x);
  std::map<int, FracScalar> m;
  for (const auto& [k, c] : r.entries()) m.emplace(p.position.at(k), c);
  return SparseVec::from_map(m);
}

SparseVec VermaQuotient::lift(const Beta& beta, const SparseVec& x) {
  Part& p = part(beta);
  std::map<int, FracScalar> m;
  for (const auto& [k, c] : x.entries()) m.emplace(p.free_cols.at(k), c);
  return SparseVec::from_map(m);
}

SparseQMatrix VermaQuotient::f_matrix(int i, const Beta& beta) {
  const Beta low = with_step(beta, i, -1);
  const int d = dim(beta), dl = dim(low);
  SparseQMatrix m(d, dl);
  for (int k = 0; k < dl; ++k) {
    SparseVec y = project(beta, base_->apply_f(i, low, lift(low, SparseVec::unit(k))));
    for (const auto& [r, c] : y.entries()) m.set(r, k, c);
  }
  return m;
}

SparseQMatrix VermaQuotient::e_matrix(int i, const Beta& beta) {
  const Beta low = with_step(beta, i, -1);
  const int d = dim(beta), dl = dim(low);
  SparseQMatrix m(dl, d);
  if (dl == 0) return m;
  for (int k = 0; k < d; ++k) {
    SparseVec y = project(low, base_->apply_e(i, beta, lift(beta, SparseVec::unit(k))));
    for (const auto& [r, c] : y.entries()) m.set(r, k, c);
  }
  return m;
}

SparseVec VermaQuotient::coords(const WordVector& v) {
  if (v.is_zero()) return {};
  return project(v.offset(rank()), base_->coords(v));
}

WordVector VermaQuotient::to_words(const Beta& beta, const SparseVec& x) {
  return base_->to_words(beta, lift(beta, x));
}

// ---------------------------------------------------------------------------

BruteSpace brute_space(const OrthoRank& rank, const std::set<int>& levi, const Beta& beta, int cap) {
  BruteSpace out;
  out.words = enumerate_words(rank, beta, cap);
  std::map<Word, int> index;
  for (std::size_t k = 0; k < out.words.size(); ++k) index.emplace(out.words[k], static_cast<int>(k));
  for (const auto& w : out.words)
    if (!w.empty() && levi.count(w.back())) out.relations.insert(SparseVec::unit(index.at(w)));
  const auto serre = serre_relations(rank);
  for (const auto& s : serre) {
    const Beta g = s.offset(rank);
    if (!dominates(beta, g)) continue;
    const Beta rest = minus(beta, g);
    // Split rest = a + b over all a in the box below rest.
    Beta a(rank.n, 0);
    while (true) {
      const Beta b = minus(rest, a);
      for (const auto& u : enumerate_words(rank, a, cap)) {
        for (const auto& w : enumerate_words(rank, b, cap)) {
          std::map<int, FracScalar> row;
          for (const auto& [sw, c] : s.terms) {
            Word x = u;
            x.insert(x.end(), sw.begin(), sw.end());
            x.insert(x.end(), w.begin(), w.end());
            row[index.at(x)] += c;
          }
          out.relations.insert(SparseVec::from_map(row));
        }
      }
      int k = 0;
      while (k < rank.n && a[k] == rest[k]) a[k++] = 0;
      if (k == rank.n) break;
      ++a[k];
    }
  }
  return out;
}

}  // namespace qclass
