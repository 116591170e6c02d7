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
 * @file codes.hpp
 * @brief Linearized Reed–Solomon codes and their generalized form with block
 * multipliers.
 *
 * A code is described by locators β (one F_q-independent block per part of
 * the composition), evaluation parameters a (one per block, pairwise
 * non-conjugate and outside the trivial class) and nonzero block multipliers
 * v. Its canonical generator has block i equal to v_i times the k-row Moore
 * matrix of β^(i) with respect to a_i.
 */

#pragma once

#include <vector>

#include "sumrank/linalg.hpp"
#include "sumrank/ore.hpp"
#include "sumrank/skew_poly.hpp"
#include "sumrank/sum_rank.hpp"

namespace sumrank {

struct GlrsParams {
  OreCtx ore;
  Composition comp;
  std::vector<Elem> beta;
  std::vector<Elem> a;
  std::vector<Elem> v;
  std::size_t k = 0;

  bool is_lrs() const;
};

/// Throws BadDimension, ShapeMismatch, ZeroMultiplier, DependentLocators or
/// ConjugacyViolation, checked in that order.
///
/// When θ is the identity and m > 1 every block of the generator has rank
/// one, so k ≤ ℓ is also required.
void validate_params(const GlrsParams& p);

/// Row i holds D_a^i applied blockwise to x, for i < rows.
Matrix moore_matrix(const OreCtx& ore, std::span<const Elem> x, std::span<const Elem> a, const Composition& comp,
                    std::size_t rows);

Matrix canonical_generator(const GlrsParams& p);

/// Codeword of f: block i is v_i·(f(β^(i)_1)_{a_i}, …). Throws DegreeTooLarge.
std::vector<Elem> encode(const GlrsParams& p, const SkewPoly& f);

struct DualLrs {
  OreCtx ore;  ///< (θ^(−1), 0)
  std::vector<Elem> alpha;
  std::vector<Elem> a;
  std::size_t k = 0;

  /// Moore matrix of alpha with respect to (ore, a), k rows.
  Matrix parity_check(const Composition& comp) const;
};

/// Dual of an LRS code with zero derivation. alpha spans the kernel of the
/// (n−1)-row Moore matrix of β and has its first nonzero entry equal to 1.
/// Throws NonzeroDerivation, NontrivialMultipliers or BadDimension (k = n).
DualLrs dual_lrs_zero_derivation(const GlrsParams& p);

enum class Multipliers { Ones, Random };

GlrsParams random_glrs(const OreCtx& ore, const Composition& comp, std::size_t k, Rng& rng,
                       Multipliers mult = Multipliers::Ones);

}  // namespace sumrank
