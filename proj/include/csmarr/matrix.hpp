#pragma once

#include "csmarr/polynomial.hpp"
#include "csmarr/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace csmarr {

using QVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }
  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  QVector apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const QMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  QMatrix reduced;                    // full reduced row-echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row-echelon form. Pivots are the
/// first exactly-nonzero entry in each column scan.
inline RrefResult rref(QMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (m(r, j) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const QMatrix& m) { return rref(m).rank(); }

/// Kernel basis from the reduced echelon form: one vector per free column,
/// in increasing column order, with a 1 in that column.
inline std::vector<QVector> kernel_basis(const QMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Rational det(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

/// Incrementally maintained reduced echelon basis of a subspace of Q^dim.
/// Insertion order decides which vectors are kept, so callers get a
/// deterministic greedy selection.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Residue of v after elimination against the current basis.
  QVector reduce(QVector v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = pivots_[i]; j < dim_; ++j)
        if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
    }
    return v;
  }

  bool contains(const QVector& v) const {
    QVector r = reduce(v);
    for (const auto& x : r)
      if (x != 0) return false;
    return true;
  }

  /// Adds v if independent; returns whether the rank grew.
  bool insert(const QVector& v) {
    QVector r = reduce(v);
    std::size_t p = 0;
    while (p < dim_ && r[p] == 0) ++p;
    if (p == dim_) return false;
    const Rational inv = 1 / r[p];
    for (std::size_t j = p; j < dim_; ++j) r[j] *= inv;
    // keep the basis fully reduced
    for (auto& row : rows_) {
      const Rational f = row[p];
      if (f == 0) continue;
      for (std::size_t j = p; j < dim_; ++j)
        if (r[j] != 0) row[j] -= f * r[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
  }

  const std::vector<QVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// True when the spans of a and b (vectors of length dim) coincide.
inline bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b, std::size_t dim) {
  EchelonBasis ea(dim), eb(dim);
  for (const auto& v : a) ea.insert(v);
  for (const auto& v : b) eb.insert(v);
  if (ea.rank() != eb.rank()) return false;
  for (const auto& v : b)
    if (!ea.contains(v)) return false;
  return true;
}

/// Basis of span(a) ∩ span(b), computed from the kernel of [A | -B].
inline std::vector<QVector> intersect_spans(const std::vector<QVector>& a,
                                            const std::vector<QVector>& b, std::size_t dim) {
  if (a.empty() || b.empty()) return {};
  QMatrix m(dim, a.size() + b.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t i = 0; i < dim; ++i) m(i, k) = a[k][i];
  for (std::size_t k = 0; k < b.size(); ++k)
    for (std::size_t i = 0; i < dim; ++i) m(i, a.size() + k) = -b[k][i];
  EchelonBasis out(dim);
  for (const auto& coeffs : kernel_basis(m)) {
    QVector v(dim);
    for (std::size_t k = 0; k < a.size(); ++k)
      if (coeffs[k] != 0)
        for (std::size_t i = 0; i < dim; ++i) v[i] += coeffs[k] * a[k][i];
    out.insert(v);
  }
  return out.rows();
}

/// Square matrix of polynomials.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Exact polynomial determinant by Laplace expansion along rows, memoized on
/// the set of remaining columns (2^n subproblems).
inline MultiPoly poly_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) throw std::invalid_argument("poly_det: empty matrix has no variable count");
  if (n > 20) throw std::invalid_argument("poly_det: matrix too large for cofactor expansion");
  const std::size_t k = m[0][0].num_vars();
  std::map<unsigned long, MultiPoly> memo;
  // det of rows [n - popcount(cols), n) restricted to the column set `cols`
  auto rec = [&](auto&& self, unsigned long cols) -> MultiPoly {
    if (cols == 0) return MultiPoly::constant(k, 1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcountl(cols));
    MultiPoly acc(k);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1UL << c))) continue;
      if (!m[row][c].is_zero()) {
        MultiPoly term = m[row][c] * self(self, cols & ~(1UL << c));
        if (sign > 0) acc += term; else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return rec(rec, (1UL << n) - 1);
}

}  // namespace csmarr
