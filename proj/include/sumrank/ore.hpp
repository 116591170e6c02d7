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
#include <vector>

#include "sumrank/field.hpp"

namespace sumrank {

/// Field automorphism x ↦ x^(p^t).
struct AutMap {
  std::int64_t t = 0;

  Elem apply(const Field& f, Elem a) const { return f.frobenius(a, t); }
  AutMap inverse() const { return AutMap{-t}; }
  friend bool operator==(AutMap, AutMap) = default;
};

/// Inner derivation δ_γ = γ(Id − θ) for the automorphism of the owning OreCtx.
struct Derivation {
  Elem gamma;
};

/**
 * The pair (θ, δ_γ) defining F_{q^m}[x; θ, δ] with θ = φ^l, φ the
 * q-Frobenius. For l ≠ 0 the constructor requires gcd(l, m) = 1 so that the
 * fixed field of θ is F_q. l = 0 (θ = Id) is accepted as a separate regime:
 * its derivation is always zero and its conjugacy classes are singletons.
 */
class OreCtx {
 public:
  /// Throws Error(InvalidAutomorphism) for l ≥ m or gcd(l, m) > 1 with l ≠ 0.
  OreCtx(FieldPtr field, unsigned theta_l, Elem gamma = kZero);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  unsigned theta_l() const { return theta_l_; }
  AutMap theta_map() const { return AutMap{static_cast<std::int64_t>(field_->s()) * theta_l_}; }
  Derivation derivation() const { return Derivation{gamma_}; }
  Elem gamma() const { return gamma_; }

  bool is_identity() const { return theta_l_ == 0; }
  bool zero_derivation() const { return gamma_.is_zero(); }
  /// True when the fixed field of θ is exactly F_q (always, except θ = Id with m > 1).
  bool fixed_field_is_fq() const { return theta_l_ != 0 || field_->m() == 1; }

  Elem theta(Elem a) const { return field_->frobenius(a, theta_t_); }
  /// θ^i(a) for any integer i.
  Elem theta_pow(Elem a, std::int64_t i) const { return field_->frobenius(a, theta_t_ * i); }
  /// δ(a) = γ·(a − θ(a)).
  Elem der(Elem a) const;

  /// N_i(a) = θ^(i−1)(a)···θ(a)·a, N_0(a) = 1.
  Elem gen_norm(Elem a, std::size_t i) const;

  /// a^c = θ(c)·a·c^(−1) + δ(c)·c^(−1). Throws Error(ZeroConjugator) for c = 0.
  Elem conjugate(Elem a, Elem c) const;
  /// Conjugacy test through the shifted-norm criterion.
  bool same_class(Elem a, Elem b) const;
  /// Conjugacy test by trying every nonzero conjugator.
  bool same_class_bruteforce(Elem a, Elem b) const;
  bool is_trivial_class(Elem a) const { return same_class(a, gamma_); }
  /// gcd(p^t − 1, q^m − 1); equals q − 1 whenever the fixed field of θ is F_q.
  std::uint64_t nontrivial_class_count() const { return class_count_; }
  /// Pairwise non-conjugate representatives of nontrivial classes.
  std::vector<Elem> sample_class_reps(std::size_t count, Rng& rng) const;

  /// Same automorphism, derivation δ_gamma.
  OreCtx with_gamma(Elem gamma) const { return OreCtx(field_, theta_l_, gamma); }
  /// (θ^(−1), zero derivation).
  OreCtx inverse_zero_derivation() const;

 private:
  FieldPtr field_;
  unsigned theta_l_;
  std::int64_t theta_t_;
  Elem gamma_;
  // a − γ and b − γ lie in the same class iff their quotient has order
  // dividing norm_exponent_.
  std::uint64_t norm_exponent_;
  std::uint64_t class_count_;
};

}  // namespace sumrank
