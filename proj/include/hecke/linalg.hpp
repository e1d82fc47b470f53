#pragma once

// Exact sparse vectors, matrices and echelonized subspaces.

#include "hecke/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

using Index = std::size_t;

/// Sparse vector: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  using Entry = std::pair<Index, Rational>;

  SparseVector() = default;
  explicit SparseVector(std::vector<Entry> entries) : entries_(std::move(entries)) { normalize(); }

  static SparseVector unit(Index i) { return SparseVector({{i, Rational(1)}}); }

  static SparseVector from_dense(const std::vector<Rational>& dense) {
    SparseVector v;
    for (Index i = 0; i < dense.size(); ++i) {
      if (!dense[i].is_zero()) v.entries_.emplace_back(i, dense[i]);
    }
    return v;
  }

  std::vector<Rational> to_dense(Index dim) const {
    std::vector<Rational> d(dim);
    for (const auto& [i, c] : entries_) d.at(i) = c;
    return d;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Coefficient at index i (zero when absent).
  Rational at(Index i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, Index k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return Rational(0);
  }

  Index leading_index() const {
    if (entries_.empty()) throw std::logic_error("leading index of zero vector");
    return entries_.front().first;
  }

  SparseVector& operator*=(const Rational& c) {
    if (c.is_zero()) {
      entries_.clear();
    } else if (!c.is_one()) {
      for (auto& e : entries_) e.second *= c;
    }
    return *this;
  }

  /// this += c * other, merging the two sorted entry lists.
  void add_scaled(const SparseVector& other, const Rational& c) {
    if (c.is_zero() || other.empty()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == entries_.end() || b->first < a->first) {
        out.emplace_back(b->first, b->second * c);
        ++b;
      } else {
        Rational s = a->second + b->second * c;
        if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  Rational dot(const SparseVector& other) const {
    Rational s;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
      if (a->first < b->first) {
        ++a;
      } else if (b->first < a->first) {
        ++b;
      } else {
        s += a->second * b->second;
        ++a;
        ++b;
      }
    }
    return s;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) {
    a.add_scaled(b, Rational(1));
    return a;
  }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) {
    a.add_scaled(b, Rational(-1));
    return a;
  }
  friend SparseVector operator*(const Rational& c, SparseVector v) { return v *= c; }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  void normalize() {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (auto& e : entries_) {
      if (!out.empty() && out.back().first == e.first) {
        out.back().second += e.second;
      } else {
        out.push_back(std::move(e));
      }
    }
    std::erase_if(out, [](const Entry& e) { return e.second.is_zero(); });
    entries_ = std::move(out);
  }

  std::vector<Entry> entries_;
};

/// Dense scratch buffer for summing many sparse vectors of one ambient size.
class Accumulator {
 public:
  explicit Accumulator(Index dim) : values_(dim), touched_flag_(dim, 0) {}

  Index dim() const { return values_.size(); }

  void add(Index i, const Rational& c) {
    if (!touched_flag_[i]) {
      touched_flag_[i] = 1;
      touched_.push_back(i);
    }
    values_[i] += c;
  }

  void add_scaled(const SparseVector& v, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [i, x] : v) add(i, c.is_one() ? x : x * c);
  }

  const Rational& value(Index i) const { return values_[i]; }

  /// Extracts the accumulated vector and resets the buffer.
  SparseVector take() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<SparseVector::Entry> out;
    out.reserve(touched_.size());
    for (Index i : touched_) {
      if (!values_[i].is_zero()) out.emplace_back(i, std::move(values_[i]));
      values_[i] = Rational(0);
      touched_flag_[i] = 0;
    }
    touched_.clear();
    return SparseVector(std::move(out));
  }

 private:
  std::vector<Rational> values_;
  std::vector<char> touched_flag_;
  std::vector<Index> touched_;
};

/// Sparse row-major matrix. For operators, row = input, column = image,
/// so the product A * B means "apply A, then B".
class Matrix {
 public:
  Matrix() = default;
  Matrix(Index rows, Index cols) : cols_(cols), rows_(rows) {}

  static Matrix identity(Index n) {
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i) m.rows_[i] = SparseVector::unit(i);
    return m;
  }

  /// Matrix of a map on basis indices (row i has a single 1 at column f[i]).
  template <class Table>
  static Matrix from_function(const Table& f, Index cols) {
    Matrix m(f.size(), cols);
    for (Index i = 0; i < f.size(); ++i) m.rows_[i] = SparseVector::unit(static_cast<Index>(f[i]));
    return m;
  }

  static Matrix from_rows(std::vector<SparseVector> rows, Index cols) {
    Matrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
  }

  static Matrix from_dense(const std::vector<std::vector<Rational>>& d) {
    Matrix m(d.size(), d.empty() ? 0 : d[0].size());
    for (Index i = 0; i < d.size(); ++i) m.rows_[i] = SparseVector::from_dense(d[i]);
    return m;
  }

  /// Inverse of flatten(): reads a row-major vector of length rows*cols.
  static Matrix unflatten(const SparseVector& v, Index rows, Index cols) {
    Matrix m(rows, cols);
    std::vector<std::vector<SparseVector::Entry>> buckets(rows);
    for (const auto& [k, c] : v) buckets[k / cols].emplace_back(k % cols, c);
    for (Index r = 0; r < rows; ++r) m.rows_[r] = SparseVector(std::move(buckets[r]));
    return m;
  }

  SparseVector flatten() const {
    std::vector<SparseVector::Entry> out;
    for (Index r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, x] : rows_[r]) out.emplace_back(r * cols_ + c, x);
    }
    return SparseVector(std::move(out));
  }

  Index rows() const { return rows_.size(); }
  Index cols() const { return cols_; }
  bool square() const { return rows_.size() == cols_; }

  const SparseVector& row(Index r) const { return rows_.at(r); }
  SparseVector& row(Index r) { return rows_.at(r); }
  Rational at(Index r, Index c) const { return rows_.at(r).at(c); }
  void set(Index r, Index c, const Rational& x) {
    SparseVector delta({{c, x - rows_.at(r).at(c)}});
    rows_[r].add_scaled(delta, Rational(1));
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.nnz();
    return n;
  }

  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const SparseVector& r) { return r.empty(); });
  }

  Rational trace() const {
    Rational t;
    for (Index i = 0; i < rows_.size(); ++i) t += rows_[i].at(i);
    return t;
  }

  Matrix transpose() const {
    std::vector<std::vector<SparseVector::Entry>> buckets(cols_);
    for (Index r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, x] : rows_[r]) buckets[c].emplace_back(r, x);
    }
    Matrix t(cols_, rows_.size());
    for (Index c = 0; c < cols_; ++c) t.rows_[c] = SparseVector(std::move(buckets[c]));
    return t;
  }

  /// Row vector times matrix.
  SparseVector apply(const SparseVector& v) const {
    Accumulator acc(cols_);
    for (const auto& [i, c] : v) acc.add_scaled(rows_.at(i), c);
    return acc.take();
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (Index r = 0; r < rows_.size(); ++r) rows_[r].add_scaled(o.rows_[r], Rational(1));
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (Index r = 0; r < rows_.size(); ++r) rows_[r].add_scaled(o.rows_[r], Rational(-1));
    return *this;
  }
  Matrix& operator*=(const Rational& c) {
    for (auto& r : rows_) r *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix p(a.rows(), b.cols_);
    Accumulator acc(b.cols_);
    for (Index r = 0; r < a.rows(); ++r) {
      for (const auto& [k, x] : a.rows_[r]) acc.add_scaled(b.rows_[k], x);
      p.rows_[r] = acc.take();
    }
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.cols_ == b.cols_ && a.rows_ == b.rows_; }

  std::vector<std::vector<Rational>> to_dense() const {
    std::vector<std::vector<Rational>> d;
    d.reserve(rows_.size());
    for (const auto& r : rows_) d.push_back(r.to_dense(cols_));
    return d;
  }

  /// Kronecker product; index (i, j) maps to i * b.rows() + j.
  friend Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
      for (Index j = 0; j < b.rows(); ++j) {
        std::vector<SparseVector::Entry> out;
        for (const auto& [c1, x] : a.rows_[i]) {
          for (const auto& [c2, y] : b.rows_[j]) out.emplace_back(c1 * b.cols() + c2, x * y);
        }
        k.rows_[i * b.rows() + j] = SparseVector(std::move(out));
      }
    }
    return k;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (o.rows() != rows() || o.cols_ != cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  }

  Index cols_ = 0;
  std::vector<SparseVector> rows_;
};

using Operator = Matrix;

/// Fully reduced row-echelon basis of a subspace of k^ambient. Each stored row
/// has coefficient 1 at its pivot (its first nonzero index) and 0 at the pivots
/// of all other rows, so the form is canonical for the span.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient), pivot_row_(ambient, npos) {}

  Index ambient() const { return ambient_; }
  Index dim() const { return rows_.size(); }

  /// Reduces v modulo the subspace.
  SparseVector reduce(const SparseVector& v) const {
    check(v);
    bool hits = false;
    for (const auto& [i, c] : v) {
      if (pivot_row_[i] != npos) {
        hits = true;
        break;
      }
    }
    if (!hits) return v;
    Accumulator acc(ambient_);
    acc.add_scaled(v, Rational(1));
    for (const auto& [i, c] : v) {
      Index r = pivot_row_[i];
      if (r != npos) acc.add_scaled(rows_[r], -c);
    }
    return acc.take();
  }

  /// Inserts v; returns whether the dimension grew.
  bool insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    Index p = r.leading_index();
    r *= r.entries().front().second.inverse();
    for (auto& row : rows_) {
      Rational c = row.at(p);
      if (!c.is_zero()) row.add_scaled(r, -c);
    }
    pivot_row_[p] = rows_.size();
    pivots_.push_back(p);
    rows_.push_back(std::move(r));
    return true;
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  /// Coordinates of a member of the subspace in the basis rows() (insertion
  /// order). The caller guarantees membership.
  SparseVector coordinates(const SparseVector& v) const {
    std::vector<SparseVector::Entry> out;
    for (const auto& [i, c] : v) {
      if (i < ambient_ && pivot_row_[i] != npos) out.emplace_back(pivot_row_[i], c);
    }
    return SparseVector(std::move(out));
  }

  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  bool is_pivot(Index i) const { return pivot_row_.at(i) != npos; }

  /// Pivots in increasing order (the canonical report order).
  std::vector<Index> sorted_pivots() const {
    std::vector<Index> p = pivots_;
    std::sort(p.begin(), p.end());
    return p;
  }

  /// Rows sorted by pivot.
  std::vector<SparseVector> sorted_rows() const {
    std::vector<SparseVector> out;
    for (Index p : sorted_pivots()) out.push_back(rows_[pivot_row_[p]]);
    return out;
  }

  std::vector<Index> free_columns() const {
    std::vector<Index> f;
    for (Index i = 0; i < ambient_; ++i) {
      if (pivot_row_[i] == npos) f.push_back(i);
    }
    return f;
  }

  /// Basis of {x : row . x = 0 for every stored row}.
  std::vector<SparseVector> orthogonal_complement() const {
    std::vector<std::vector<SparseVector::Entry>> by_free(ambient_);
    for (Index r = 0; r < rows_.size(); ++r) {
      for (const auto& [i, c] : rows_[r]) {
        if (i != pivots_[r]) by_free[i].emplace_back(pivots_[r], -c);
      }
    }
    std::vector<SparseVector> out;
    for (Index f : free_columns()) {
      auto entries = std::move(by_free[f]);
      entries.emplace_back(f, Rational(1));
      out.emplace_back(std::move(entries));
    }
    return out;
  }

  bool contains_subspace(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const SparseVector& v) { return contains(v); });
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains_subspace(b);
  }

 private:
  static constexpr Index npos = static_cast<Index>(-1);

  void check(const SparseVector& v) const {
    if (!v.empty() && v.entries().back().first >= ambient_) {
      throw std::invalid_argument("vector index " + std::to_string(v.entries().back().first) +
                                  " outside ambient dimension " + std::to_string(ambient_));
    }
  }

  Index ambient_ = 0;
  std::vector<SparseVector> rows_;
  std::vector<Index> pivots_;
  std::vector<Index> pivot_row_;
};

inline Subspace span(Index ambient, const std::vector<SparseVector>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

inline Index rank(const Matrix& m) {
  Subspace s(m.cols());
  for (Index r = 0; r < m.rows(); ++r) s.insert(m.row(r));
  return s.dim();
}

/// Basis of the right kernel {x : M x = 0}, as sparse column vectors.
inline std::vector<SparseVector> kernel(const Matrix& m) {
  Subspace s(m.cols());
  for (Index r = 0; r < m.rows(); ++r) s.insert(m.row(r));
  return s.orthogonal_complement();
}

/// Basis of the left kernel {v : v M = 0}.
inline std::vector<SparseVector> left_kernel(const Matrix& m) { return kernel(m.transpose()); }

/// Quotient V / N with N given as a subspace of k^ambient. Classes are
/// represented on the free columns of N's echelon form, which index a
/// complement of N.
class QuotientSpace {
 public:
  explicit QuotientSpace(Subspace base) : base_(std::move(base)), slot_(base_.ambient(), npos) {
    for (Index f : base_.free_columns()) {
      slot_[f] = reps_.size();
      reps_.push_back(f);
    }
  }

  Index dim() const { return reps_.size(); }
  const Subspace& base() const { return base_; }
  /// Ambient index of the representative of the k-th quotient basis vector.
  const std::vector<Index>& representatives() const { return reps_; }

  /// Coordinates of the class of v.
  SparseVector project(const SparseVector& v) const {
    SparseVector r = base_.reduce(v);
    std::vector<SparseVector::Entry> out;
    out.reserve(r.nnz());
    for (const auto& [i, c] : r) out.emplace_back(slot_[i], c);
    return SparseVector(std::move(out));
  }

 private:
  static constexpr Index npos = static_cast<Index>(-1);
  Subspace base_;
  std::vector<Index> slot_;
  std::vector<Index> reps_;
};

/// Inverse of a square matrix by Gauss-Jordan; nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  Index n = m.rows();
  // Echelonize [M | I]; the pivots of an invertible M all land in the left block.
  Subspace s(2 * n);
  for (Index r = 0; r < n; ++r) {
    SparseVector row = m.row(r);
    row.add_scaled(SparseVector::unit(n + r), Rational(1));
    s.insert(row);
  }
  if (s.dim() != n) return std::nullopt;
  Matrix inv(n, n);
  for (Index k = 0; k < n; ++k) {
    Index p = s.pivots()[k];
    if (p >= n) return std::nullopt;
    std::vector<SparseVector::Entry> right;
    for (const auto& [i, c] : s.rows()[k]) {
      if (i >= n) right.emplace_back(i - n, c);
    }
    inv.row(p) = SparseVector(std::move(right));
  }
  return inv;
}

/// Solves x M = b for a row vector x; nullopt when inconsistent. Returns one
/// particular solution.
inline std::optional<SparseVector> solve_left(const Matrix& m, const SparseVector& b) {
  // Echelonize rows of [M | e_r] and reduce [b | 0].
  Index r = m.rows();
  Index c = m.cols();
  Subspace s(c + r);
  for (Index i = 0; i < r; ++i) {
    SparseVector row = m.row(i);
    row.add_scaled(SparseVector::unit(c + i), Rational(1));
    s.insert(row);
  }
  SparseVector red = s.reduce(b);
  std::vector<SparseVector::Entry> x;
  for (const auto& [i, v] : red) {
    if (i < c) return std::nullopt;
    x.emplace_back(i - c, -v);
  }
  return SparseVector(std::move(x));
}

}  // namespace hecke
