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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sumrank/field.hpp"

namespace sumrank {

/// Dense row-major matrix over F_{q^m}. The field is passed to every
/// algorithm instead of being stored, so matrices stay plain values.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, kZero) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Elem>>& rows, std::size_t cols);
  static Matrix row_vector(std::span<const Elem> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Elem> row_copy(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  std::vector<Elem> column(std::size_t c) const;

  void append_row(std::span<const Elem> r);
  /// Columns [begin, begin + count).
  Matrix col_block(std::size_t begin, std::size_t count) const;
  Matrix transposed() const;

  const std::vector<Elem>& data() const { return data_; }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  Matrix reduced;  ///< same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Canonical reduced row-echelon form with unit pivots.
RrefResult rref(const Field& f, Matrix m);
std::size_t rank(const Field& f, const Matrix& m);

/// Row space basis in rref with no zero rows. Equal row spaces have equal bases.
struct RowSpace {
  Matrix basis;
  std::size_t dim() const { return basis.rows(); }
  friend bool operator==(const RowSpace&, const RowSpace&) = default;
};

RowSpace row_space(const Field& f, const Matrix& m);
bool same_row_space(const Field& f, const Matrix& a, const Matrix& b);

/// Basis (as rows) of {x : M·xᵀ = 0}.
Matrix right_kernel(const Field& f, const Matrix& m);
Matrix vstack(const Matrix& a, const Matrix& b);
RowSpace row_space_sum(const Field& f, const Matrix& a, const Matrix& b);
/// ⟨A⟩ ∩ ⟨B⟩ computed as the kernel of the stacked kernels.
RowSpace row_space_intersection(const Field& f, const Matrix& a, const Matrix& b);

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
std::vector<Elem> vec_mat(const Field& f, std::span<const Elem> v, const Matrix& m);

/// One solution of A·x = b with free variables set to zero, or nullopt.
std::optional<std::vector<Elem>> solve_linear(const Field& f, const Matrix& a, std::span<const Elem> b);

/// t×m matrix whose row i holds the F_q-coordinates of v_i.
Matrix expand_over_fq(const Field& f, std::span<const Elem> v);
/// Maximum number of F_q-linearly independent entries of v.
std::size_t rank_fq(const Field& f, std::span<const Elem> v);

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
/// Uniform invertible matrix over F_{q^m} (rejection sampling).
Matrix random_invertible(const Field& f, std::size_t n, Rng& rng);
/// Uniform invertible matrix with entries in F_q.
Matrix random_invertible_fq(const Field& f, std::size_t n, Rng& rng);

}  // namespace sumrank
