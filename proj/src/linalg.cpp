/*
 * Copyright 2026 The sumrank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sumrank/linalg.hpp"

#include <utility>

#include "sumrank/error.hpp"

namespace sumrank {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::ShapeMismatch, "ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::row_vector(std::span<const Elem> v) {
  Matrix m(1, v.size());
  std::copy(v.begin(), v.end(), m.row(0).begin());
  return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::append_row(std::span<const Elem> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error(Errc::ShapeMismatch, "appended row has wrong length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::col_block(std::size_t begin, std::size_t count) const {
  Matrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, begin + c);
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RrefResult rref(const Field& f, Matrix m) {
  RrefResult res;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(lead, j));
    }
    const Elem s = f.inv(m(lead, c));
    for (std::size_t j = c; j < cols; ++j) m(lead, j) = f.mul(m(lead, j), s);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const Elem factor = m(r, c);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) {
        m(r, j) = f.sub(m(r, j), f.mul(factor, m(lead, j)));
      }
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = lead;
  res.reduced = std::move(m);
  return res;
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).rank; }

RowSpace row_space(const Field& f, const Matrix& m) {
  auto r = rref(f, m);
  Matrix basis(r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::copy(r.reduced.row(i).begin(), r.reduced.row(i).end(), basis.row(i).begin());
  }
  return RowSpace{std::move(basis)};
}

bool same_row_space(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  return row_space(f, a) == row_space(f, b);
}

Matrix right_kernel(const Field& f, const Matrix& m) {
  const std::size_t cols = m.cols();
  auto r = rref(f, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Matrix k(cols - r.rank, cols);
  std::size_t out = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    k(out, free) = kOne;
    for (std::size_t i = 0; i < r.rank; ++i) {
      k(out, r.pivots[i]) = f.neg(r.reduced(i, free));
    }
    ++out;
  }
  return k;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0 && a.cols() == 0) return b;
  if (b.rows() == 0 && b.cols() == 0) return a;
  if (a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "vstack column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  std::copy(a.data().begin(), a.data().end(), out.row(0).begin());
  if (b.rows() > 0) std::copy(b.data().begin(), b.data().end(), out.row(a.rows()).begin());
  return out;
}

RowSpace row_space_sum(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "row space sum needs equal column counts");
  return row_space(f, vstack(a, b));
}

RowSpace row_space_intersection(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) {
    throw Error(Errc::ShapeMismatch, "row space intersection needs equal column counts");
  }
  // (A ∩ B) = (A^⊥ + B^⊥)^⊥.
  const Matrix ka = right_kernel(f, a);
  const Matrix kb = right_kernel(f, b);
  Matrix stacked(0, a.cols());
  stacked = vstack(ka, kb);
  if (stacked.rows() == 0) return row_space(f, Matrix::identity(a.cols()));
  return row_space(f, right_kernel(f, stacked));
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
      }
    }
  }
  return out;
}

std::vector<Elem> vec_mat(const Field& f, std::span<const Elem> v, const Matrix& m) {
  if (v.size() != m.rows()) throw Error(Errc::ShapeMismatch, "vector-matrix shape mismatch");
  std::vector<Elem> out(m.cols(), kZero);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m(i, j)));
  }
  return out;
}

std::optional<std::vector<Elem>> solve_linear(const Field& f, const Matrix& a, std::span<const Elem> b) {
  if (b.size() != a.rows()) throw Error(Errc::ShapeMismatch, "right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto res = rref(f, std::move(aug));
  if (!res.pivots.empty() && res.pivots.back() == a.cols()) return std::nullopt;
  std::vector<Elem> x(a.cols(), kZero);
  for (std::size_t i = 0; i < res.rank; ++i) x[res.pivots[i]] = res.reduced(i, a.cols());
  return x;
}

Matrix expand_over_fq(const Field& f, std::span<const Elem> v) {
  Matrix out(v.size(), f.m());
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto c = f.fq_coords(v[i]);
    std::copy(c.begin(), c.end(), out.row(i).begin());
  }
  return out;
}

std::size_t rank_fq(const Field& f, std::span<const Elem> v) {
  // Entries of the expansion lie in F_q, and rank does not grow under field
  // extension, so the F_{q^m} elimination gives the F_q-rank.
  return rank(f, expand_over_fq(f, v));
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.random(rng);
  }
  return m;
}

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(f, m) == n) return m;
  }
}

Matrix random_invertible_fq(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = f.random_subfield(rng);
    }
    if (rank(f, m) == n) return m;
  }
}

}  // namespace sumrank
