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

#include "sumrank/skew_poly.hpp"

#include <algorithm>

#include "sumrank/error.hpp"

namespace sumrank {

SkewPoly::SkewPoly(std::vector<Elem> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly SkewPoly::x_power(std::size_t i) {
  std::vector<Elem> c(i + 1, kZero);
  c[i] = kOne;
  return SkewPoly(std::move(c));
}

Degree SkewPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

SkewPoly sp_add(const OreCtx& ore, const SkewPoly& f, const SkewPoly& g) {
  const Field& fld = ore.field();
  std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()), kZero);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fld.add(f.coeff(i), g.coeff(i));
  return SkewPoly(std::move(out));
}

SkewPoly sp_mul(const OreCtx& ore, const SkewPoly& f, const SkewPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const Field& fld = ore.field();
  const std::size_t df = f.coeffs().size();
  const std::size_t dg = g.coeffs().size();
  std::vector<Elem> out(df + dg - 1, kZero);
  // cur holds x^i · g; left multiplication by x maps h_j x^j to
  // θ(h_j) x^(j+1) + δ(h_j) x^j.
  std::vector<Elem> cur = g.coeffs();
  for (std::size_t i = 0; i < df; ++i) {
    const Elem fi = f.coeffs()[i];
    if (!fi.is_zero()) {
      for (std::size_t j = 0; j < cur.size(); ++j) out[j] = fld.add(out[j], fld.mul(fi, cur[j]));
    }
    if (i + 1 == df) break;
    std::vector<Elem> next(cur.size() + 1, kZero);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      next[j + 1] = fld.add(next[j + 1], ore.theta(cur[j]));
      next[j] = fld.add(next[j], ore.der(cur[j]));
    }
    cur = std::move(next);
  }
  return SkewPoly(std::move(out));
}

SkewPoly random_skew_poly(const Field& f, std::size_t bound, Rng& rng) {
  std::vector<Elem> c(bound);
  for (auto& e : c) e = f.random(rng);
  return SkewPoly(std::move(c));
}

Elem op_d(const OreCtx& ore, Elem a, Elem b) {
  const Field& f = ore.field();
  return f.add(f.mul(ore.theta(b), a), ore.der(b));
}

Elem op_d_pow(const OreCtx& ore, Elem a, Elem b, std::size_t i) {
  for (std::size_t r = 0; r < i; ++r) b = op_d(ore, a, b);
  return b;
}

Elem op_d_inv_pow(const OreCtx& ore, Elem a, Elem b, std::size_t i) {
  if (!ore.zero_derivation()) throw Error(Errc::NonzeroDerivation, "operator inverse needs a zero derivation");
  if (i == 0) return b;
  if (a.is_zero()) throw Error(Errc::ZeroEvaluationParameter, "operator inverse needs a nonzero parameter");
  const Field& f = ore.field();
  return ore.theta_pow(f.div(b, ore.gen_norm(a, i)), -static_cast<std::int64_t>(i));
}

Elem gen_op_eval(const OreCtx& ore, const SkewPoly& f, Elem b, Elem a) {
  const Field& fld = ore.field();
  Elem acc = kZero;
  Elem d = b;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) d = op_d(ore, a, d);
    acc = fld.add(acc, fld.mul(f.coeffs()[i], d));
  }
  return acc;
}

std::vector<Elem> op_apply_vec(const OreCtx& ore, std::span<const Elem> a, std::span<const Elem> x,
                               const Composition& comp) {
  if (a.size() != comp.ell() || x.size() != comp.n()) {
    throw Error(Errc::ShapeMismatch, "operator input does not match the composition");
  }
  std::vector<Elem> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = op_d(ore, a[comp.block_of(j)], x[j]);
  return out;
}

Matrix op_apply_mat(const OreCtx& ore, std::span<const Elem> a, const Matrix& m, const Composition& comp) {
  return op_apply_mat_pow(ore, a, m, comp, 1);
}

Matrix op_apply_mat_pow(const OreCtx& ore, std::span<const Elem> a, const Matrix& m, const Composition& comp,
                        std::size_t i) {
  if (a.size() != comp.ell() || m.cols() != comp.n()) {
    throw Error(Errc::ShapeMismatch, "operator input does not match the composition");
  }
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = op_d_pow(ore, a[comp.block_of(c)], m(r, c), i);
  }
  return out;
}

Matrix gamma_stack(const OreCtx& ore, const Matrix& g, std::span<const Elem> a, const Composition& comp,
                   std::size_t j) {
  Matrix out = g;
  Matrix block = g;
  for (std::size_t i = 0; i < j; ++i) {
    block = op_apply_mat(ore, a, block, comp);
    out = vstack(out, block);
  }
  return out;
}

}  // namespace sumrank
