#include "strval/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace strval {

SparseVec SparseVec::unit(int index, Rational value) {
  SparseVec v;
  if (value != 0) v.entries_.emplace_back(index, std::move(value));
  return v;
}

SparseVec SparseVec::from_map(const std::map<int, Rational>& entries) {
  SparseVec v;
  for (const auto& [i, x] : entries)
    if (x != 0) v.entries_.emplace_back(i, x);
  return v;
}

Rational SparseVec::at(int index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const auto& e, int i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

SparseVec SparseVec::axpy(const Rational& c, const SparseVec& other) const {
  if (c == 0) return *this;
  SparseVec out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational s = a->second + c * b->second;
      if (s != 0) out.entries_.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  return out;
}

SparseVec SparseVec::scaled(const Rational& c) const {
  if (c == 0) return {};
  SparseVec out = *this;
  for (auto& e : out.entries_) e.second *= c;
  return out;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.cols_[i] = SparseVec::unit(i);
  return m;
}

void SparseMatrix::add_to(int i, int j, const Rational& value) {
  cols_[j] = cols_[j].axpy(value, SparseVec::unit(i));
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  std::map<int, Rational> acc;
  for (const auto& [j, x] : v.entries())
    for (const auto& [i, m] : cols_[j].entries()) acc[i] += m * x;
  return SparseVec::from_map(acc);
}

RationalVector SparseMatrix::apply_transpose(const RationalVector& x) const {
  RationalVector out(cols_.size());
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    Rational s = 0;
    for (const auto& [i, m] : cols_[j].entries())
      if (x[i] != 0) s += m * x[i];
    out[j] = std::move(s);
  }
  return out;
}

RationalVector SparseMatrix::apply_dense(const RationalVector& x) const {
  RationalVector out(rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (x[j] == 0) continue;
    for (const auto& [i, m] : cols_[j].entries()) out[i] += m * x[j];
  }
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols() != other.rows()) throw std::invalid_argument("matrix shape mismatch");
  SparseMatrix out(rows_, other.cols());
  for (int j = 0; j < other.cols(); ++j) out.cols_[j] = apply(other.cols_[j]);
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
  SparseMatrix out(rows_, cols());
  for (int j = 0; j < cols(); ++j) out.cols_[j] = cols_[j].axpy(1, other.cols_[j]);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
  SparseMatrix out(rows_, cols());
  for (int j = 0; j < cols(); ++j) out.cols_[j] = cols_[j].axpy(-1, other.cols_[j]);
  return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
  SparseMatrix out(rows_, cols());
  for (int j = 0; j < cols(); ++j) out.cols_[j] = cols_[j].scaled(c);
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& c) { return c.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.entries().size();
  return n;
}

std::pair<SparseVec, RationalVector> EchelonBasis::reduce(const SparseVec& v) const {
  SparseVec r = v;
  RationalVector mult(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational c = r.at(rows_[k].pivot);
    if (c == 0) continue;
    r = r.axpy(-c, rows_[k].vec);
    mult[k] = c;
  }
  return {r, mult};
}

bool EchelonBasis::add(const SparseVec& v) {
  auto [residual, mult] = reduce(v);
  if (residual.empty()) return false;
  const int g = size();
  generators_.push_back(v);
  // residual = v - sum mult[k] rows[k]
  RationalVector combo(g + 1);
  combo[g] = 1;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (mult[k] == 0) continue;
    for (int t = 0; t < g; ++t) combo[t] -= mult[k] * rows_[k].combo[t];
  }
  for (auto& row : rows_) row.combo.resize(g + 1);
  const auto& [pivot, pv] = residual.entries().front();
  Rational inv = 1 / pv;
  Row row{pivot, residual.scaled(inv), {}};
  for (auto& c : combo) c *= inv;
  row.combo = std::move(combo);
  // Keep rows fully reduced at the new pivot.
  for (auto& other : rows_) {
    Rational c = other.vec.at(pivot);
    if (c == 0) continue;
    other.vec = other.vec.axpy(-c, row.vec);
    for (int t = 0; t <= g; ++t) other.combo[t] -= c * row.combo[t];
  }
  rows_.push_back(std::move(row));
  return true;
}

std::optional<RationalVector> EchelonBasis::coordinates(const SparseVec& v) const {
  auto [residual, mult] = reduce(v);
  if (!residual.empty()) return std::nullopt;
  RationalVector out(generators_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (mult[k] == 0) continue;
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += mult[k] * rows_[k].combo[t];
  }
  return out;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<int> row_reduce(std::vector<RationalVector>& m, int ncols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int k = 0; k < static_cast<int>(m[i].size()); ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_of(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  return static_cast<int>(row_reduce(rows, static_cast<int>(rows[0].size())).size());
}

std::optional<RationalVector> solve(std::vector<RationalVector> a, RationalVector b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto pivots = row_reduce(a, n);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  RationalVector x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::vector<RationalVector> nullspace(std::vector<RationalVector> rows, int n) {
  auto pivots = row_reduce(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(std::vector<RationalVector> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace strval
