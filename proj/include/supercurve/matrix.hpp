// Copyright 2026 The supercurve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense row-major matrices over a finite field.

#ifndef SUPERCURVE_MATRIX_HPP
#define SUPERCURVE_MATRIX_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "supercurve/error.hpp"
#include "supercurve/ff.hpp"
#include "supercurve/poly.hpp"

namespace supercurve {

class FieldMatrix {
 public:
  FieldMatrix() = default;

  FieldMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static FieldMatrix identity(Field field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Rows given as integers, reduced into the field.
  static FieldMatrix from_ints(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    FieldMatrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw domain_error("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length n).
  static FieldMatrix from_columns(Field field, std::size_t n,
                                  const std::vector<std::vector<FieldElement>>& cols) {
    FieldMatrix m(field, n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != n) throw domain_error("column length mismatch");
      for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<FieldElement> column(std::size_t j) const {
    std::vector<FieldElement> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  bool is_zero() const {
    for (const auto& x : a_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    a.check_field(b);
    if (a.cols_ != b.rows_) throw domain_error("matrix shapes do not compose");
    FieldMatrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const FieldElement& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const FieldElement& y = b(k, j);
          if (!y.is_zero()) r(i, j) += x * y;
        }
      }
    }
    return r;
  }

  /// Matrix-vector product.
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const {
    if (v.size() != cols_) throw domain_error("vector length mismatch");
    std::vector<FieldElement> r(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!v[j].is_zero() && !(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
      }
    }
    return r;
  }

  friend FieldMatrix operator+(FieldMatrix a, const FieldMatrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend FieldMatrix operator-(FieldMatrix a, const FieldMatrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend FieldMatrix operator*(const FieldElement& s, FieldMatrix a) {
    for (auto& x : a.a_) x = s * x;
    return a;
  }

  FieldMatrix transpose() const {
    FieldMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// The p-th power applied to every entry.
  FieldMatrix frobenius() const {
    FieldMatrix r = *this;
    for (auto& x : r.a_) x = x.frobenius();
    return r;
  }

  FieldMatrix pow(std::uint64_t e) const {
    if (!is_square()) throw domain_error("power of a non-square matrix");
    FieldMatrix result = identity(field_, rows_);
    FieldMatrix base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Entries re-read over a field containing this one.
  FieldMatrix lift(Field k) const {
    if (k == field_) return *this;
    FieldMatrix r(k, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = embed(a_[i], k);
    return r;
  }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t piv = row;
      while (piv < rows_ && (*this)(piv, col).is_zero()) ++piv;
      if (piv == rows_) continue;
      swap_rows(piv, row);
      const FieldElement inv = (*this)(row, col).inverse();
      for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || (*this)(i, col).is_zero()) continue;
        const FieldElement t = (*this)(i, col);
        for (std::size_t j = col; j < cols_; ++j) {
          if (!(*this)(row, j).is_zero()) (*this)(i, j) -= t * (*this)(row, j);
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  FieldMatrix rref() const {
    FieldMatrix r = *this;
    r.rref_in_place();
    return r;
  }

  std::size_t rank() const {
    FieldMatrix r = *this;
    return r.rref_in_place().size();
  }

  /// Basis of {v : A v = 0} as the columns of a cols() x k matrix.
  FieldMatrix nullspace() const {
    FieldMatrix r = *this;
    const auto pivots = r.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<FieldElement> v(cols_, field_.zero());
      v[free] = field_.one();
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
      basis.push_back(std::move(v));
    }
    return from_columns(field_, cols_, basis);
  }

  FieldMatrix inverse() const {
    if (!is_square()) throw domain_error("inverse of a non-square matrix");
    const std::size_t n = rows_;
    FieldMatrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = field_.one();
    }
    const auto pivots = aug.rref_in_place();
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw division_by_zero("singular matrix");
    FieldMatrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    }
    return inv;
  }

  bool is_invertible() const { return is_square() && rank() == rows_; }

  /// Characteristic polynomial det(xI - A), via reduction to Hessenberg form.
  Polynomial char_poly() const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldMatrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << '[';
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << "]\n";
    }
    return os;
  }

 private:
  void check_field(const FieldMatrix& b) const {
    if (field_ != b.field_) throw field_mismatch("matrices over different fields");
  }
  void check_shape(const FieldMatrix& b) const {
    check_field(b);
    if (rows_ != b.rows_ || cols_ != b.cols_) throw domain_error("matrix shape mismatch");
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> a_;
};

inline Polynomial FieldMatrix::char_poly() const {
  if (!is_square()) throw domain_error("characteristic polynomial of a non-square matrix");
  const std::size_t n = rows_;
  FieldMatrix h = *this;
  // Similarity transforms down to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h(piv, m - 1).is_zero()) ++piv;
    if (piv == n) continue;
    h.swap_rows(piv, m);
    h.swap_cols(piv, m);
    const FieldElement inv = h(m, m - 1).inverse();
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h(i, m - 1).is_zero()) continue;
      const FieldElement t = h(i, m - 1) * inv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= t * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) += t * h(j, i);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{l=i+1..k} h_{l,l-1}) p_{i-1}
  const Polynomial x = Polynomial::x(field_);
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.push_back(Polynomial::constant(field_.one()));
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial next = (x - Polynomial::constant(h(k, k))) * p[k];
    FieldElement sub = field_.one();
    for (std::size_t i = k; i-- > 0;) {
      sub *= h(i + 1, i);
      if (sub.is_zero()) break;
      next -= (sub * h(i, k)) * p[i];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

/// True when every column of `b` lies in the column span of `a`.
inline bool column_span_contains(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows()) throw domain_error("row count mismatch");
  FieldMatrix joined(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) joined(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) joined(i, a.cols() + j) = b(i, j);
  }
  return joined.rank() == a.rank();
}

}  // namespace supercurve

#endif  // SUPERCURVE_MATRIX_HPP
