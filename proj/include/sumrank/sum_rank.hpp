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

#include <cstdint>
#include <span>
#include <vector>

#include "sumrank/field.hpp"
#include "sumrank/linalg.hpp"

namespace sumrank {

/// Integer composition n = n_1 + … + n_ℓ with positive parts.
class Composition {
 public:
  Composition() = default;
  /// Throws MalformedInput on an empty list or a zero part.
  explicit Composition(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t ell() const { return parts_.size(); }
  std::size_t n() const { return n_; }
  std::size_t part(std::size_t i) const { return parts_[i]; }
  /// Index of the first coordinate of block i.
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  /// Block index of coordinate j.
  std::size_t block_of(std::size_t j) const { return block_of_[j]; }

  template <typename T>
  std::span<T> block(std::span<T> x, std::size_t i) const {
    return x.subspan(offsets_[i], parts_[i]);
  }

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<std::size_t> parts_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> block_of_;
  std::size_t n_ = 0;
};

/// Multiplicities of the distinct part values, in order of first appearance.
std::vector<std::size_t> lambda_of(const Composition& comp);

/// Σ_i rk_q(x^(i)).
std::size_t sum_rank_weight(const Field& f, std::span<const Elem> x, const Composition& comp);
/// wt(x − y); throws ShapeMismatch on length mismatch.
std::size_t sum_rank_dist(const Field& f, std::span<const Elem> x, std::span<const Elem> y,
                          const Composition& comp);

/// Vector of sum-rank weight n: every block F_q-independent.
/// Throws PartExceedsM when some n_i > m.
std::vector<Elem> random_full_weight_vector(const Field& f, const Composition& comp, Rng& rng);

/// Codeword-enumeration guard: 2^16 unless SUMRANK_SIZE_GUARD is set.
std::uint64_t enumeration_guard();

/// Minimum sum-rank weight over all nonzero codewords m·G, by enumerating
/// every message. Throws SizeGuardExceeded or BadDimension (zero rows).
std::size_t min_distance_bruteforce(const Field& f, const Matrix& g, const Composition& comp);

}  // namespace sumrank
