#include "qclass/linalg.hpp"

#include <algorithm>

namespace qclass {

SparseVec SparseVec::unit(int index, FracScalar value) {
  SparseVec v;
  if (!value.is_zero()) v.entries_.emplace_back(index, std::move(value));
  return v;
}

SparseVec SparseVec::from_map(const std::map<int, FracScalar>& m) {
  SparseVec v;
  for (const auto& [k, x] : m)
    if (!x.is_zero()) v.entries_.emplace_back(k, x);
  return v;
}

FracScalar SparseVec::at(int index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, int k) { return e.first < k; });
  if (it != entries_.end() && it->first == index) return it->second;
  return FracScalar();
}

void SparseVec::set(int index, FracScalar value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, int k) { return e.first < k; });
  if (it != entries_.end() && it->first == index) {
    if (value.is_zero()) entries_.erase(it);
    else it->second = std::move(value);
  } else if (!value.is_zero()) {
    entries_.insert(it, Entry(index, std::move(value)));
  }
}

void SparseVec::axpy(const FracScalar& c, const SparseVec& o) {
  if (c.is_zero() || o.is_zero()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + o.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < o.entries_.size()) {
    if (j == o.entries_.size() || (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
      out.push_back(std::move(entries_[i++]));
    } else if (i == entries_.size() || o.entries_[j].first < entries_[i].first) {
      out.emplace_back(o.entries_[j].first, c * o.entries_[j].second);
      ++j;
    } else {
      FracScalar x = entries_[i].second + c * o.entries_[j].second;
      if (!x.is_zero()) out.emplace_back(entries_[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  entries_ = std::move(out);
}

SparseVec SparseVec::scaled(const FracScalar& c) const {
  if (c.is_zero()) return {};
  SparseVec r = *this;
  if (c.is_one()) return r;
  for (auto& e : r.entries_) e.second *= c;
  return r;
}

bool operator==(const SparseVec& a, const SparseVec& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    if (a.entries_[k].first != b.entries_[k].first) return false;
    if (a.entries_[k].second != b.entries_[k].second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

SparseVec Echelon::reduce(const SparseVec& v) const {
  if (rows_.empty() || v.is_zero()) return v;
  std::map<int, FracScalar> work;
  for (const auto& [k, x] : v.entries()) work.emplace(k, x);
  auto it = work.begin();
  while (it != work.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const FracScalar c = it->second;
    const int key = it->first;
    for (const auto& [k, x] : row->second.entries()) {
      auto [w, fresh] = work.try_emplace(k);
      w->second -= c * x;
      if (w->second.is_zero() && k != key) work.erase(w);
    }
    it = work.erase(work.find(key));
  }
  return SparseVec::from_map(work);
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.is_zero()) return false;
  const int pivot = r.lead_index();
  r = r.scaled(r.lead_value().inverse());
  rows_.emplace(pivot, std::move(r));
  return true;
}

void Echelon::make_reduced() {
  // Right to left: rows with larger pivots are already free of other pivot columns.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec& row = it->second;
    std::vector<SparseVec::Entry> hits;
    for (const auto& e : row.entries())
      if (e.first != it->first && rows_.count(e.first)) hits.push_back(e);
    for (const auto& [k, x] : hits) row.axpy(-x, rows_.at(k));
  }
}

std::vector<SparseVec> kernel(const std::vector<SparseVec>& rows, int ncols) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  e.make_reduced();
  std::vector<SparseVec> out;
  for (int f = 0; f < ncols; ++f) {
    if (e.has_pivot(f)) continue;
    SparseVec x = SparseVec::unit(f);
    for (const auto& [p, row] : e.rows()) {
      FracScalar c = row.at(f);
      if (!c.is_zero()) x.set(p, -c);
    }
    out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------------------

SparseQMatrix SparseQMatrix::identity(int n) {
  SparseQMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, FracScalar(1));
  return m;
}

void SparseQMatrix::add(int i, int j, const FracScalar& v) {
  data_.at(i).set(j, data_.at(i).at(j) + v);
}

std::size_t SparseQMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool SparseQMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVec& r) { return r.is_zero(); });
}

SparseQMatrix SparseQMatrix::transpose() const {
  SparseQMatrix t(cols_, rows_);
  std::vector<std::vector<SparseVec::Entry>> cols(cols_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, x] : data_[i].entries()) cols[j].emplace_back(i, x);
  for (int j = 0; j < cols_; ++j) {
    std::map<int, FracScalar> m(cols[j].begin(), cols[j].end());
    t.data_[j] = SparseVec::from_map(m);
  }
  return t;
}

SparseQMatrix SparseQMatrix::scaled(const FracScalar& c) const {
  SparseQMatrix r = *this;
  for (auto& row : r.data_) row = row.scaled(c);
  return r;
}

SparseQMatrix& SparseQMatrix::operator+=(const SparseQMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (int i = 0; i < rows_; ++i) data_[i] += o.data_[i];
  return *this;
}

SparseQMatrix& SparseQMatrix::operator-=(const SparseQMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (int i = 0; i < rows_; ++i) data_[i] -= o.data_[i];
  return *this;
}

SparseQMatrix operator*(const SparseQMatrix& a, const SparseQMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  SparseQMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    std::map<int, FracScalar> acc;
    for (const auto& [k, x] : a.data_[i].entries())
      for (const auto& [j, y] : b.data_[k].entries()) acc[j] += x * y;
    c.data_[i] = SparseVec::from_map(acc);
  }
  return c;
}

bool operator==(const SparseQMatrix& a, const SparseQMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (int i = 0; i < a.rows_; ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

SparseVec SparseQMatrix::apply(const SparseVec& v) const {
  // (Mv)_i = sum_j M_ij v_j
  std::map<int, FracScalar> acc;
  for (int i = 0; i < rows_; ++i) {
    FracScalar s;
    const auto& r = data_[i].entries();
    const auto& e = v.entries();
    std::size_t a = 0, b = 0;
    while (a < r.size() && b < e.size()) {
      if (r[a].first < e[b].first) ++a;
      else if (e[b].first < r[a].first) ++b;
      else s += r[a++].second * e[b++].second;
    }
    if (!s.is_zero()) acc.emplace(i, std::move(s));
  }
  return SparseVec::from_map(acc);
}

FracScalar SparseQMatrix::trace() const {
  FracScalar t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += data_[i].at(i);
  return t;
}

int SparseQMatrix::rank() const {
  Echelon e;
  for (const auto& r : data_) e.insert(r);
  return e.rank();
}

SparseQMatrix kron(const SparseQMatrix& a, const SparseQMatrix& b) {
  SparseQMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (const auto& [j, x] : a.row(i).entries())
      for (int k = 0; k < b.rows(); ++k)
        for (const auto& [l, y] : b.row(k).entries()) c.set(i * b.rows() + k, j * b.cols() + l, x * y);
  return c;
}

}  // namespace qclass
