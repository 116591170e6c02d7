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

#include "sumrank/codes.hpp"

#include <algorithm>
#include <string>

#include "sumrank/error.hpp"

namespace sumrank {

bool GlrsParams::is_lrs() const {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e.is_one(); });
}

void validate_params(const GlrsParams& p) {
  const Field& f = p.ore.field();
  const std::size_t n = p.comp.n();
  const std::size_t ell = p.comp.ell();
  if (p.k < 1 || p.k > n) throw Error(Errc::BadDimension, "dimension must lie in [1, n]");
  if (!p.ore.fixed_field_is_fq() && p.k > ell) {
    throw Error(Errc::BadDimension, "identity automorphism over a proper extension needs k <= number of blocks");
  }
  if (p.beta.size() != n || p.a.size() != ell || p.v.size() != ell) {
    throw Error(Errc::ShapeMismatch, "parameter lengths do not match the composition");
  }
  for (auto e : p.v) {
    if (e.is_zero()) throw Error(Errc::ZeroMultiplier, "block multipliers must be nonzero");
  }
  for (std::size_t i = 0; i < ell; ++i) {
    const auto block = p.comp.block(std::span<const Elem>(p.beta), i);
    if (rank_fq(f, block) != block.size()) {
      throw Error(Errc::DependentLocators, "locator block " + std::to_string(i) + " is F_q-dependent");
    }
  }
  for (std::size_t i = 0; i < ell; ++i) {
    if (p.ore.is_trivial_class(p.a[i])) {
      throw Error(Errc::ConjugacyViolation, "evaluation parameter " + std::to_string(i) + " is in the trivial class");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (p.ore.same_class(p.a[i], p.a[j])) {
        throw Error(Errc::ConjugacyViolation,
                    "evaluation parameters " + std::to_string(j) + " and " + std::to_string(i) + " are conjugate");
      }
    }
  }
}

Matrix moore_matrix(const OreCtx& ore, std::span<const Elem> x, std::span<const Elem> a, const Composition& comp,
                    std::size_t rows) {
  if (x.size() != comp.n() || a.size() != comp.ell()) {
    throw Error(Errc::ShapeMismatch, "Moore matrix input does not match the composition");
  }
  Matrix m(rows, x.size());
  if (rows == 0) return m;
  std::copy(x.begin(), x.end(), m.row(0).begin());
  for (std::size_t r = 1; r < rows; ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) m(r, c) = op_d(ore, a[comp.block_of(c)], m(r - 1, c));
  }
  return m;
}

Matrix canonical_generator(const GlrsParams& p) {
  validate_params(p);
  const Field& f = p.ore.field();
  Matrix g = moore_matrix(p.ore, p.beta, p.a, p.comp, p.k);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) g(r, c) = f.mul(p.v[p.comp.block_of(c)], g(r, c));
  }
  return g;
}

std::vector<Elem> encode(const GlrsParams& p, const SkewPoly& poly) {
  if (poly.degree() && *poly.degree() >= p.k) throw Error(Errc::DegreeTooLarge, "message polynomial degree >= k");
  const Field& f = p.ore.field();
  std::vector<Elem> out(p.comp.n());
  for (std::size_t c = 0; c < out.size(); ++c) {
    const std::size_t blk = p.comp.block_of(c);
    out[c] = f.mul(p.v[blk], gen_op_eval(p.ore, poly, p.beta[c], p.a[blk]));
  }
  return out;
}

Matrix DualLrs::parity_check(const Composition& comp) const { return moore_matrix(ore, alpha, a, comp, k); }

DualLrs dual_lrs_zero_derivation(const GlrsParams& p) {
  if (!p.ore.zero_derivation()) throw Error(Errc::NonzeroDerivation, "dual construction needs a zero derivation");
  if (!p.is_lrs()) throw Error(Errc::NontrivialMultipliers, "dual construction needs all-one multipliers");
  const std::size_t n = p.comp.n();
  if (p.k >= n) throw Error(Errc::BadDimension, "dual construction needs k < n");
  const Field& f = p.ore.field();

  const Matrix syndrome = moore_matrix(p.ore, p.beta, p.a, p.comp, n - 1);
  const Matrix ker = right_kernel(f, syndrome);
  if (ker.rows() == 0) throw Error(Errc::NoSolution, "syndrome system has only the zero solution");
  std::vector<Elem> alpha = ker.row_copy(0);
  const auto lead = std::find_if(alpha.begin(), alpha.end(), [](Elem e) { return !e.is_zero(); });
  const Elem scale = f.inv(*lead);
  for (auto& e : alpha) e = f.mul(e, scale);

  const OreCtx dual_ore = p.ore.inverse_zero_derivation();
  std::vector<Elem> a_dual(p.a.size());
  for (std::size_t i = 0; i < a_dual.size(); ++i) a_dual[i] = p.ore.theta_pow(p.a[i], -1);
  return DualLrs{dual_ore, std::move(alpha), std::move(a_dual), n - p.k};
}

GlrsParams random_glrs(const OreCtx& ore, const Composition& comp, std::size_t k, Rng& rng, Multipliers mult) {
  const Field& f = ore.field();
  GlrsParams p{ore, comp, {}, {}, {}, k};
  p.beta = random_full_weight_vector(f, comp, rng);
  p.a = ore.sample_class_reps(comp.ell(), rng);
  p.v.assign(comp.ell(), kOne);
  if (mult == Multipliers::Random) {
    for (auto& e : p.v) e = f.random_nonzero(rng);
  }
  validate_params(p);
  return p;
}

}  // namespace sumrank
