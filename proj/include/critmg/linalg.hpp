/*
  Degreewise linear algebra over the rationals.

  Everything downstream (structure algebra bases, stalks, boundary images,
  Hom spaces) reduces to row reduction of exact rational matrices. Subspaces
  of Q^n are kept in reduced row echelon form, which makes every basis this
  project produces canonical and every subspace comparison a row-by-row
  equality test.
*/

#pragma once

#include <algorithm>
#include <cassert>
#include <optional>

#include "critmg/rational.hpp"

namespace critmg {

struct QMatrix {
  std::size_t cols = 0;
  std::vector<QVec> rows;

  QMatrix() = default;
  explicit QMatrix(std::size_t c) : cols(c) {}

  void add_row(QVec r) {
    assert(r.size() == cols);
    rows.push_back(std::move(r));
  }
};

// In-place reduced row echelon form; returns the pivot column of each
// surviving row. Zero rows are removed, so rows.size() == rank afterwards.
inline std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows.size() && m.rows[sel][c] == 0) ++sel;
    if (sel == m.rows.size()) continue;
    std::swap(m.rows[r], m.rows[sel]);
    const Rational inv = Rational(1) / m.rows[r][c];
    for (std::size_t j = c; j < m.cols; ++j) m.rows[r][j] *= inv;
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      if (i == r || m.rows[i][c] == 0) continue;
      const Rational f = m.rows[i][c];
      for (std::size_t j = c; j < m.cols; ++j) m.rows[i][j] -= f * m.rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.rows.resize(r);
  return pivots;
}

// Canonical basis of {x : Ax = 0}, itself returned in RREF.
inline std::vector<QVec> kernel_basis(QMatrix a) {
  const std::size_t n = a.cols;
  std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<QVec> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVec v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a.rows[i][f];
    out.push_back(std::move(v));
  }
  QMatrix k(n);
  for (auto& v : out) k.add_row(std::move(v));
  rref(k);
  return k.rows;
}

// A linear subspace of Q^dim, stored as RREF rows.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t dim) : dim_(dim) {}

  static Subspace span(std::size_t dim, const std::vector<QVec>& vectors) {
    QMatrix m(dim);
    for (const auto& v : vectors) m.add_row(v);
    rref(m);
    Subspace s(dim);
    s.basis_ = std::move(m.rows);
    return s;
  }

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVec>& basis() const { return basis_; }

  // Reduces v against the basis; the remainder is zero iff v is contained.
  QVec reduce(QVec v) const {
    assert(v.size() == dim_);
    for (const auto& row : basis_) {
      std::size_t p = 0;
      while (p < dim_ && row[p] == 0) ++p;
      if (p == dim_ || v[p] == 0) continue;
      const Rational f = v[p];
      for (std::size_t j = p; j < dim_; ++j) v[j] -= f * row[j];
    }
    return v;
  }

  bool contains(const QVec& v) const {
    QVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
  }

  bool contains(const Subspace& other) const {
    for (const auto& row : other.basis_)
      if (!contains(row)) return false;
    return true;
  }

  bool operator==(const Subspace& other) const {
    return dim_ == other.dim_ && basis_ == other.basis_;
  }

  Subspace sum(const Subspace& other) const {
    assert(dim_ == other.dim_);
    std::vector<QVec> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(dim_, all);
  }

  // Intersection via the kernel of the stacked coefficient matrix:
  // x in A cap B  iff  x = u*A = v*B for coefficient rows u, v.
  Subspace intersect(const Subspace& other) const {
    assert(dim_ == other.dim_);
    const std::size_t ka = basis_.size(), kb = other.basis_.size();
    if (ka == 0 || kb == 0) return Subspace(dim_);
    QMatrix sys(ka + kb);
    for (std::size_t j = 0; j < dim_; ++j) {
      QVec row(ka + kb, Rational(0));
      for (std::size_t i = 0; i < ka; ++i) row[i] = basis_[i][j];
      for (std::size_t i = 0; i < kb; ++i) row[ka + i] = -other.basis_[i][j];
      sys.add_row(std::move(row));
    }
    std::vector<QVec> combos = kernel_basis(std::move(sys));
    std::vector<QVec> vectors;
    for (const auto& c : combos) {
      QVec v(dim_, Rational(0));
      for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < dim_; ++j) v[j] += c[i] * basis_[i][j];
      vectors.push_back(std::move(v));
    }
    return span(dim_, vectors);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<QVec> basis_;
};

// One solution of Ax = b, if any.
inline std::optional<QVec> solve_linear(QMatrix a, const QVec& b) {
  assert(b.size() == a.rows.size());
  const std::size_t n = a.cols;
  QMatrix aug(n + 1);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    QVec row = a.rows[i];
    row.push_back(b[i]);
    aug.add_row(std::move(row));
  }
  std::vector<std::size_t> pivots = rref(aug);
  QVec x(n, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == n) return std::nullopt;  // inconsistent
    x[pivots[i]] = aug.rows[i][n];
  }
  return x;
}

// Rational matrix inverse (throws if singular).
inline std::vector<QVec> invert(const std::vector<QVec>& a) {
  const std::size_t n = a.size();
  QMatrix m(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    assert(a[i].size() == n);
    QVec row(2 * n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = a[i][j];
    row[n + i] = 1;
    m.add_row(std::move(row));
  }
  std::vector<std::size_t> pivots = rref(m);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("matrix is singular");
  std::vector<QVec> inv(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m.rows[i][n + j];
  return inv;
}

}  // namespace critmg
