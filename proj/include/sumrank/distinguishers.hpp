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
 * @file distinguishers.hpp
 * @brief Structural tests separating linearized Reed–Solomon codes from
 * random codes.
 *
 * Each test measures one integer (a dimension or a rank) and compares it to
 * the value forced by the algebraic structure. The value typical for a
 * random code of the same shape is reported alongside as the baseline.
 */

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sumrank/linalg.hpp"
#include "sumrank/ore.hpp"
#include "sumrank/sum_rank.hpp"

namespace sumrank {

enum class Certainty {
  Certain,       ///< the statistic rules the structure out
  Probable,      ///< the statistic matches the structured value, which differs from the baseline
  Inconclusive,  ///< structured and random codes share the same expected statistic
};

std::string_view certainty_name(Certainty c);

struct Verdict {
  bool structured = false;
  std::size_t statistic = 0;
  std::size_t threshold = 0;
  std::size_t baseline = 0;
  Certainty certainty = Certainty::Probable;
  std::size_t j = 0;  ///< stack depth or intersection depth, where applicable
};

std::vector<Elem> star_product(const Field& f, std::span<const Elem> x, std::span<const Elem> y);

/// Dimension of the span of all star products of row pairs (i ≤ j).
std::size_t square_code_dim(const Field& f, const Matrix& g);

/// Structured iff dim(C⋆C) = min(ℓ, 2k−1). Requires 2 < k ≤ n/2.
Verdict square_distinguisher(const Field& f, const Matrix& g, const Composition& comp);

/// Smallest j ≥ 1 with k+j < min((j+1)k, n). Throws NoValidJ.
std::size_t default_overbeck_j(std::size_t k, std::size_t n);

/// Structured iff rank(Γ_a^j(G)) = k+j. Throws NoValidJ without a usable
/// default and BadJ for j > n−k.
Verdict overbeck_distinguisher(const OreCtx& ore, const Matrix& g, std::span<const Elem> a,
                               const Composition& comp, std::optional<std::size_t> j = std::nullopt);

/// dim ∩_{i=0}^{j} ⟨D_a^i(G)⟩. Throws BadJ unless j < k.
std::size_t intersection_chain(const OreCtx& ore, const Matrix& g, std::span<const Elem> a,
                               const Composition& comp, std::size_t j);
/// Row space of the same intersection.
RowSpace intersection_space(const OreCtx& ore, const Matrix& g, std::span<const Elem> a, const Composition& comp,
                            std::size_t j);

/// Structured iff intersection_chain = k−j; baseline max(0, k − j(n−k)).
/// Default j is 1.
Verdict intersection_distinguisher(const OreCtx& ore, const Matrix& g, std::span<const Elem> a,
                                   const Composition& comp, std::optional<std::size_t> j = std::nullopt);

struct SweepResult {
  std::vector<Elem> v;
  Verdict verdict;
  std::uint64_t candidates_tried = 0;
};

/// Tries block multipliers with v_1 = 1 in graded lexicographic order of the
/// element indices of (v_2, …, v_ℓ), unscaling G and running the Overbeck
/// test. Throws BudgetExhausted after budget candidates and
/// StructureNotFound when every candidate failed.
SweepResult glrs_multiplier_sweep(const OreCtx& ore, const Matrix& g, std::span<const Elem> a,
                                  const Composition& comp, std::optional<std::size_t> j, std::uint64_t budget);

/// G with block i scaled by scale[i].
Matrix scale_blocks(const Field& f, const Matrix& g, std::span<const Elem> scale, const Composition& comp);

}  // namespace sumrank
