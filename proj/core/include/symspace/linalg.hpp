// Copyright 2026 The symspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symspace/errors.hpp"

namespace symspace::linalg {

// Dense row-major matrix over an arbitrary field element type. All
// arithmetic goes through a field adapter (see fields.hpp), so the same
// routines serve F_q and the rationals.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class F>
using Mat = Matrix<typename F::value_type>;
template <class F>
using Vec = std::vector<typename F::value_type>;

template <class F>
Mat<F> zeros(const F& f, std::size_t r, std::size_t c) {
  return Mat<F>(r, c, f.zero());
}

template <class F>
Mat<F> identity(const F& f, std::size_t n) {
  Mat<F> m = zeros(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
Mat<F> from_rows(const F& f, const std::vector<Vec<F>>& rows, std::size_t cols) {
  Mat<F> m = zeros(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

template <class F>
Mat<F> multiply(const F& f, const Mat<F>& a, const Mat<F>& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch in multiply");
  Mat<F> r = zeros(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = f.add(r(i, j), f.mul(a(i, k), b(k, j)));
    }
  return r;
}

template <class F>
Vec<F> apply(const F& f, const Mat<F>& a, const Vec<F>& v) {
  if (a.cols() != v.size()) throw DomainError("matrix/vector shape mismatch");
  Vec<F> r(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!f.is_zero(a(i, j)) && !f.is_zero(v[j])) r[i] = f.add(r[i], f.mul(a(i, j), v[j]));
  return r;
}

template <class F>
Mat<F> add(const F& f, const Mat<F>& a, const Mat<F>& b) {
  Mat<F> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.add(a(i, j), b(i, j));
  return r;
}

template <class F>
Mat<F> sub(const F& f, const Mat<F>& a, const Mat<F>& b) {
  Mat<F> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.sub(a(i, j), b(i, j));
  return r;
}

template <class F>
Mat<F> scale(const F& f, const Mat<F>& a, const typename F::value_type& s) {
  Mat<F> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.mul(s, a(i, j));
  return r;
}

template <class F>
Mat<F> transpose(const F& f, const Mat<F>& a) {
  Mat<F> r = zeros(f, a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

template <class F>
typename F::value_type trace(const F& f, const Mat<F>& a) {
  auto t = f.zero();
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t = f.add(t, a(i, i));
  return t;
}

template <class F>
bool is_zero(const F& f, const Mat<F>& a) {
  for (const auto& v : a.data())
    if (!f.is_zero(v)) return false;
  return true;
}

template <class F>
Mat<F> power(const F& f, const Mat<F>& a, unsigned k) {
  Mat<F> r = identity(f, a.rows());
  for (unsigned i = 0; i < k; ++i) r = multiply(f, r, a);
  return r;
}

// Reduced row echelon form; pivots lists the pivot column of each nonzero row.
template <class F>
struct Echelon {
  Mat<F> m;
  std::vector<std::size_t> pivots;
};

template <class F>
Echelon<F> rref(const F& f, Mat<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const F& f, const Mat<F>& m) {
  return rref(f, m).pivots.size();
}

// Basis of {x : m x = 0}.
template <class F>
std::vector<Vec<F>> nullspace(const F& f, const Mat<F>& m) {
  auto e = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.m(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Row-reduced basis of the span of the given vectors.
template <class F>
std::vector<Vec<F>> span_basis(const F& f, const std::vector<Vec<F>>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  auto e = rref(f, from_rows(f, vectors, dim));
  std::vector<Vec<F>> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    auto row = e.m.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

template <class F>
bool in_span(const F& f, const std::vector<Vec<F>>& basis, const Vec<F>& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!f.is_zero(x)) return false;
    return true;
  }
  auto with = basis;
  with.push_back(v);
  return rank(f, from_rows(f, with, v.size())) == rank(f, from_rows(f, basis, v.size()));
}

template <class F>
typename F::value_type determinant(const F& f, Mat<F> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  auto det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(m(piv, c))) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    auto inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m(i, c))) continue;
      auto factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

template <class F>
std::optional<Mat<F>> inverse(const F& f, const Mat<F>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("inverse of a non-square matrix");
  Mat<F> aug = zeros(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto e = rref(f, std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat<F> inv = zeros(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

template <class F>
bool is_nilpotent(const F& f, const Mat<F>& m) {
  return is_zero(f, power(f, m, static_cast<unsigned>(m.rows())));
}

}  // namespace symspace::linalg
