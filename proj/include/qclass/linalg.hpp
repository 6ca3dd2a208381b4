#pragma once

// Sparse vectors, row echelon forms and sparse matrices over FracScalar.

#include <map>
#include <vector>

#include "qclass/coeff.hpp"

namespace qclass {

class SparseVec {
 public:
  using Entry = std::pair<int, FracScalar>;

  SparseVec() = default;
  static SparseVec unit(int index, FracScalar value = FracScalar(1));
  static SparseVec from_map(const std::map<int, FracScalar>& m);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  int lead_index() const { return entries_.front().first; }
  const FracScalar& lead_value() const { return entries_.front().second; }
  FracScalar at(int index) const;

  void set(int index, FracScalar value);
  // this += c * o
  void axpy(const FracScalar& c, const SparseVec& o);
  SparseVec scaled(const FracScalar& c) const;
  SparseVec operator-() const { return scaled(FracScalar(-1)); }
  SparseVec& operator+=(const SparseVec& o) {
    axpy(FracScalar(1), o);
    return *this;
  }
  SparseVec& operator-=(const SparseVec& o) {
    axpy(FracScalar(-1), o);
    return *this;
  }
  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend bool operator==(const SparseVec& a, const SparseVec& b);
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

 private:
  std::vector<Entry> entries_;  // sorted by index, no zeros
};

// Row echelon form: each stored row has leading coefficient 1 at its pivot,
// the smallest index among its entries, and pivots are distinct.
class Echelon {
 public:
  // Residue of v modulo the row space; canonical for the coset.
  SparseVec reduce(const SparseVec& v) const;
  // Adds v to the row space; returns false if it was already contained.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool has_pivot(int index) const { return rows_.count(index) != 0; }
  const std::map<int, SparseVec>& rows() const { return rows_; }
  // Clear every pivot column from the other rows.
  void make_reduced();

 private:
  std::map<int, SparseVec> rows_;
};

// Basis of {x : sum_j x_j rows[i][j] = 0 for all i} in dimension ncols.
std::vector<SparseVec> kernel(const std::vector<SparseVec>& rows, int ncols);

class SparseQMatrix {
 public:
  SparseQMatrix() = default;
  SparseQMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}
  static SparseQMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SparseVec& row(int i) const { return data_.at(i); }
  FracScalar at(int i, int j) const { return data_.at(i).at(j); }
  void set(int i, int j, FracScalar v) { data_.at(i).set(j, std::move(v)); }
  void add(int i, int j, const FracScalar& v);
  std::size_t nonzeros() const;
  bool is_zero() const;

  SparseQMatrix transpose() const;
  SparseQMatrix scaled(const FracScalar& c) const;
  SparseQMatrix& operator+=(const SparseQMatrix& o);
  SparseQMatrix& operator-=(const SparseQMatrix& o);
  friend SparseQMatrix operator+(SparseQMatrix a, const SparseQMatrix& b) { return a += b; }
  friend SparseQMatrix operator-(SparseQMatrix a, const SparseQMatrix& b) { return a -= b; }
  friend SparseQMatrix operator*(const SparseQMatrix& a, const SparseQMatrix& b);
  friend bool operator==(const SparseQMatrix& a, const SparseQMatrix& b);
  friend bool operator!=(const SparseQMatrix& a, const SparseQMatrix& b) { return !(a == b); }

  SparseVec apply(const SparseVec& v) const;
  FracScalar trace() const;
  int rank() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVec> data_;
};

SparseQMatrix kron(const SparseQMatrix& a, const SparseQMatrix& b);

}  // namespace qclass
