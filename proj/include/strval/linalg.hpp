#pragma once

#include "strval/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace strval {

/// Sparse vector as sorted (index, nonzero value) pairs.
class SparseVec {
 public:
  SparseVec() = default;
  static SparseVec unit(int index, Rational value = 1);
  static SparseVec from_map(const std::map<int, Rational>& entries);

  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<int, Rational>>& entries() const { return entries_; }
  Rational at(int index) const;

  /// this + c * other
  SparseVec axpy(const Rational& c, const SparseVec& other) const;
  SparseVec scaled(const Rational& c) const;

  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::vector<std::pair<int, Rational>> entries_;
};

/// Column-major sparse matrix: column j is the image of basis vector j.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols, SparseVec{}) {}
  static SparseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(cols_.size()); }
  const SparseVec& col(int j) const { return cols_[j]; }
  void set_col(int j, SparseVec v) { cols_[j] = std::move(v); }
  Rational at(int i, int j) const { return cols_[j].at(i); }
  void add_to(int i, int j, const Rational& value);

  SparseVec apply(const SparseVec& v) const;
  /// Transpose applied to a dense vector: (M^T x)_j = sum_i M_ij x_i.
  RationalVector apply_transpose(const RationalVector& x) const;
  RationalVector apply_dense(const RationalVector& x) const;

  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix operator+(const SparseMatrix& other) const;
  SparseMatrix operator-(const SparseMatrix& other) const;
  SparseMatrix scaled(const Rational& c) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int rows_ = 0;
  std::vector<SparseVec> cols_;
};

/// Incremental row-echelon basis of a subspace spanned by "generator" vectors.
/// Tracks how each echelon row is expressed in the generators so that any vector
/// in the span can be written in generator coordinates.
class EchelonBasis {
 public:
  /// Adds v if it is independent of the current span. Returns true when added.
  bool add(const SparseVec& v);
  int size() const { return static_cast<int>(generators_.size()); }
  const SparseVec& generator(int k) const { return generators_[k]; }

  /// Coordinates of v in the generators, or nullopt when v is outside the span.
  std::optional<RationalVector> coordinates(const SparseVec& v) const;

 private:
  struct Row {
    int pivot;
    SparseVec vec;           // pivot entry normalized to 1
    RationalVector combo;    // vec = sum combo[k] * generators_[k]
  };
  // Reduces v against the rows; returns residual and the multiples subtracted.
  std::pair<SparseVec, RationalVector> reduce(const SparseVec& v) const;

  std::vector<SparseVec> generators_;
  std::vector<Row> rows_;
};

/// Rank of a dense rational matrix (rows as vectors).
int rank_of(std::vector<RationalVector> rows);

/// Solves the square system A x = b; nullopt when singular.
std::optional<RationalVector> solve(std::vector<RationalVector> a, RationalVector b);

/// Basis of { x : A x = 0 } for A given by rows, with n columns.
std::vector<RationalVector> nullspace(std::vector<RationalVector> rows, int n);

Rational determinant(std::vector<RationalVector> m);

Rational dot(const RationalVector& a, const RationalVector& b);
bool is_zero(const RationalVector& v);

}  // namespace strval
