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
 * @file recovery.hpp
 * @brief Recovery of canonical parameters from an arbitrary generator matrix.
 *
 * Two stages. With the identity automorphism the evaluation parameters and
 * block multipliers come from a generalized Reed–Solomon code hidden in one
 * column per block. The locators then come from one of three routes: the
 * one-dimensional dual of the deepest Γ-stack, the (k−1)-fold intersection
 * chain, or (identity automorphism only) column ratios inside each block.
 *
 * Every successful result is checked by comparing the row space of the
 * rebuilt canonical generator with the input, so a report is never
 * returned with parameters that fail to generate the code.
 */

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sumrank/codes.hpp"
#include "sumrank/linalg.hpp"

namespace sumrank {

/// Column 0 of every block, k×ℓ.
Matrix extract_grs_column_code(const Matrix& g, const Composition& comp);

struct GrsParams {
  std::vector<Elem> points;
  std::vector<Elem> mults;
};

/// Generator of GRS_k(points, mults): row i is (mults_j · points_j^i).
Matrix grs_generator(const Field& f, const GrsParams& grs, std::size_t k);

/// Points (pairwise distinct, nonzero) and multipliers (nonzero) of a
/// generalized Reed–Solomon code given by any generator. Every result is
/// verified by row-space equality. Throws StructureNotFound.
GrsParams sidelnikov_shestakov(const Field& f, const Matrix& g);

struct EvalParams {
  std::vector<Elem> a;
  std::vector<Elem> v;
};

/// Evaluation parameters and multipliers for the identity automorphism.
/// Throws UnsupportedRegime for other Ore contexts and StructureNotFound.
EvalParams recover_a_v(const OreCtx& ore, const Matrix& g, const Composition& comp);

/// Locators from the kernel of Γ_a^(n−k−1)(G). Needs zero derivation.
/// Throws KernelNotOneDimensional or DegenerateSolution.
std::vector<Elem> recover_beta_dual(const OreCtx& ore, const Matrix& g, std::span<const Elem> a,
                                    const Composition& comp);
/// Locators from the (k−1)-fold intersection chain. Needs zero derivation.
/// Throws IntersectionNotOneDimensional or DegenerateSolution.
std::vector<Elem> recover_beta_intersection(const OreCtx& ore, const Matrix& g, std::span<const Elem> a,
                                            const Composition& comp);
/// Locators as column ratios within each block (identity automorphism).
/// Throws StructureNotFound or DegenerateSolution.
std::vector<Elem> recover_beta_block_ratio(const OreCtx& ore, const Matrix& g, const Composition& comp);

enum class RecoveryMethod { SquareSs, OverbeckDual, Intersection, Combined };
/// FullSpace covers k = n, where any F_q-independent locator blocks work.
enum class BetaRoute { Dual, Intersection, BlockRatio, FullSpace };

std::string_view method_name(RecoveryMethod m);
std::string_view route_name(BetaRoute r);

struct RecoveryOptions {
  std::optional<std::vector<Elem>> a;  ///< known evaluation parameters
  std::optional<std::vector<Elem>> v;  ///< known multipliers; all ones when absent
};

struct RecoveryReport {
  GlrsParams params;
  RecoveryMethod method = RecoveryMethod::Combined;
  BetaRoute beta_route = BetaRoute::Dual;
  bool verified = false;
  double elapsed_ms = 0.0;
};

/// Full pipeline. Throws UnsupportedRegime (nonzero derivation, or unknown a
/// with θ ≠ Id), StructureNotFound when no route yields locators and
/// VerificationFailed when locators were found but do not reproduce G.
RecoveryReport recover_full(const OreCtx& ore, const Matrix& g, const Composition& comp,
                            const RecoveryOptions& options = {});

}  // namespace sumrank
