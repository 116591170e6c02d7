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

#include <vector>

#include "sumrank/codes.hpp"
#include "sumrank/linalg.hpp"
#include "sumrank/ore.hpp"
#include "sumrank/sum_rank.hpp"

namespace sumrank {

/// x ↦ (c_1 x^(π⁻¹(1)) M_1 | … | c_ℓ x^(π⁻¹(ℓ)) M_ℓ).
///
/// pi stores images, 0-based: block i of the input lands in block pi[i].
struct LinearIsometry {
  std::vector<Elem> c;
  std::vector<Matrix> M;
  std::vector<std::size_t> pi;

  static LinearIsometry identity(const Composition& comp);
};

/// A linear isometry followed by the automorphism x ↦ x^(p^aut_t) on every entry.
struct SemilinearIsometry {
  LinearIsometry lin;
  std::int64_t aut_t = 0;

  static SemilinearIsometry identity(const Composition& comp) { return {LinearIsometry::identity(comp), 0}; }
};

/// Throws ShapeMismatch, LengthClassViolation, ZeroMultiplier or
/// PreconditionViolated (a matrix outside GL(n_i, F_q)).
void check_isometry(const Field& f, const LinearIsometry& iso, const Composition& comp);

std::vector<Elem> apply_linear(const Field& f, const LinearIsometry& iso, std::span<const Elem> x,
                               const Composition& comp);
std::vector<Elem> apply_semilinear(const Field& f, const SemilinearIsometry& iso, std::span<const Elem> x,
                                   const Composition& comp);
/// Row-wise apply_semilinear.
Matrix apply_to_rows(const Field& f, const SemilinearIsometry& iso, const Matrix& g, const Composition& comp);

/// outer ∘ inner, i.e. x ↦ outer(inner(x)).
SemilinearIsometry compose(const Field& f, const SemilinearIsometry& outer, const SemilinearIsometry& inner);

/// Parameters whose canonical generator spans the image of the code under
/// iso. The result lives in the Ore context with derivation δ_{σ(γ)}.
GlrsParams transport_params(const SemilinearIsometry& iso, const GlrsParams& p);

SemilinearIsometry random_isometry(const Field& f, const Composition& comp, Rng& rng, bool semilinear);

struct Disguise {
  Matrix public_g;
  SemilinearIsometry iso;
  Matrix scramble;  ///< S, so that public_g = S · iso(canonical)
};

Disguise random_disguise(const GlrsParams& p, Rng& rng, bool semilinear);

}  // namespace sumrank
