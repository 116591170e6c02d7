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

/**
 * @file skew_poly.hpp
 * @brief Skew polynomials over F_{q^m}[x; θ, δ] and generalized operator
 * evaluation.
 *
 * The operator D_a(b) = θ(b)·a + δ(b) drives everything in this header:
 * f(b)_a = Σ f_i D_a^i(b) is the evaluation used by linearized Reed–Solomon
 * codes, and the blockwise operator applied to matrices gives the stack
 * (M; D_a(M); …; D_a^j(M)) used by the rank distinguisher.
 */

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sumrank/linalg.hpp"
#include "sumrank/ore.hpp"
#include "sumrank/sum_rank.hpp"

namespace sumrank {

/// Degree of a skew polynomial; the zero polynomial has degree −∞, which is
/// modelled as an empty optional rather than a sentinel integer.
using Degree = std::optional<std::size_t>;

class SkewPoly {
 public:
  SkewPoly() = default;
  /// Trailing zero coefficients are trimmed.
  explicit SkewPoly(std::vector<Elem> coeffs);

  static SkewPoly x_power(std::size_t i);

  const std::vector<Elem>& coeffs() const { return coeffs_; }
  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

 private:
  std::vector<Elem> coeffs_;
};

SkewPoly sp_add(const OreCtx& ore, const SkewPoly& f, const SkewPoly& g);
/// Product under x·a = θ(a)·x + δ(a).
SkewPoly sp_mul(const OreCtx& ore, const SkewPoly& f, const SkewPoly& g);
/// Random polynomial with deg < bound (possibly zero).
SkewPoly random_skew_poly(const Field& f, std::size_t bound, Rng& rng);

/// D_a(b) = θ(b)·a + δ(b).
Elem op_d(const OreCtx& ore, Elem a, Elem b);
/// D_a^i(b); D_a^0 is the identity.
Elem op_d_pow(const OreCtx& ore, Elem a, Elem b, std::size_t i);
/// θ^(−i)(b / N_i(a)), the inverse of D_a^i when δ = 0.
/// Throws NonzeroDerivation or ZeroEvaluationParameter.
Elem op_d_inv_pow(const OreCtx& ore, Elem a, Elem b, std::size_t i);

/// f(b)_a = Σ f_i D_a^i(b).
Elem gen_op_eval(const OreCtx& ore, const SkewPoly& f, Elem b, Elem a);

/// Blockwise D_a on a vector: block i uses a[i].
std::vector<Elem> op_apply_vec(const OreCtx& ore, std::span<const Elem> a, std::span<const Elem> x,
                               const Composition& comp);
/// Row-wise op_apply_vec.
Matrix op_apply_mat(const OreCtx& ore, std::span<const Elem> a, const Matrix& m, const Composition& comp);
/// D_a^i applied blockwise to every row.
Matrix op_apply_mat_pow(const OreCtx& ore, std::span<const Elem> a, const Matrix& m, const Composition& comp,
                        std::size_t i);

/// (G; D_a(G); …; D_a^j(G)), each block obtained from the previous one.
Matrix gamma_stack(const OreCtx& ore, const Matrix& g, std::span<const Elem> a, const Composition& comp,
                   std::size_t j);

}  // namespace sumrank
