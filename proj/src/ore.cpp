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

#include "sumrank/ore.hpp"

#include <numeric>
#include <string>
#include <unordered_set>

#include "sumrank/error.hpp"

namespace sumrank {

OreCtx::OreCtx(FieldPtr field, unsigned theta_l, Elem gamma)
    : field_(std::move(field)), theta_l_(theta_l), gamma_(gamma) {
  const unsigned m = field_->m();
  if (theta_l_ >= m) {
    throw Error(Errc::InvalidAutomorphism, "theta exponent l must be below m");
  }
  if (theta_l_ != 0 && std::gcd(theta_l_, m) != 1) {
    throw Error(Errc::InvalidAutomorphism,
                "gcd(l, m) = " + std::to_string(std::gcd(theta_l_, m)) + " is not supported");
  }
  if (gamma_.v >= field_->order()) throw Error(Errc::MalformedInput, "gamma outside field");
  // δ_γ = γ(Id − Id) vanishes for every γ.
  if (theta_l_ == 0) gamma_ = kZero;
  theta_t_ = static_cast<std::int64_t>(field_->s()) * theta_l_;

  // {θ(c)/c} = {c^(p^t − 1)} is the subgroup of order N / gcd(p^t − 1, N).
  const std::uint64_t n1 = field_->order() - 1;
  std::uint64_t pt_minus_one = 0;
  if (theta_t_ != 0) {
    std::uint64_t pt = 1;
    for (std::int64_t i = 0; i < theta_t_; ++i) pt = (pt * field_->p()) % n1;
    pt_minus_one = (pt + n1 - 1) % n1;
  }
  class_count_ = std::gcd(pt_minus_one, n1);
  if (class_count_ == 0) class_count_ = n1;
  norm_exponent_ = n1 / class_count_;
}

Elem OreCtx::der(Elem a) const {
  if (gamma_.is_zero()) return kZero;
  const Field& f = *field_;
  return f.mul(gamma_, f.sub(a, theta(a)));
}

Elem OreCtx::gen_norm(Elem a, std::size_t i) const {
  const Field& f = *field_;
  Elem acc = kOne;
  Elem t = a;
  for (std::size_t j = 0; j < i; ++j) {
    acc = f.mul(acc, t);
    t = theta(t);
  }
  return acc;
}

Elem OreCtx::conjugate(Elem a, Elem c) const {
  if (c.is_zero()) throw Error(Errc::ZeroConjugator, "conjugator must be nonzero");
  const Field& f = *field_;
  const Elem cinv = f.inv(c);
  return f.add(f.mul(f.mul(theta(c), a), cinv), f.mul(der(c), cinv));
}

bool OreCtx::same_class(Elem a, Elem b) const {
  const bool a_triv = a == gamma_;
  const bool b_triv = b == gamma_;
  if (a_triv || b_triv) return a_triv && b_triv;
  const Field& f = *field_;
  const Elem ratio = f.div(f.sub(b, gamma_), f.sub(a, gamma_));
  return f.pow(ratio, static_cast<std::int64_t>(norm_exponent_)).is_one();
}

bool OreCtx::same_class_bruteforce(Elem a, Elem b) const {
  for (std::uint32_t c = 1; c < field_->order(); ++c) {
    if (conjugate(a, Elem(c)) == b) return true;
  }
  return false;
}

std::vector<Elem> OreCtx::sample_class_reps(std::size_t count, Rng& rng) const {
  if (count > class_count_) {
    throw Error(Errc::NotEnoughClasses, "requested " + std::to_string(count) + " classes, only " +
                                            std::to_string(class_count_) + " nontrivial classes exist");
  }
  const Field& f = *field_;
  // Classes correspond to cosets g^i·H of the norm-one subgroup H = <g^C>,
  // shifted by γ.
  std::vector<std::uint64_t> cosets;
  std::unordered_set<std::uint64_t> seen;
  while (cosets.size() < count) {
    const std::uint64_t i = uniform_below(rng, class_count_);
    if (seen.insert(i).second) cosets.push_back(i);
  }
  std::vector<Elem> reps;
  reps.reserve(count);
  for (auto i : cosets) {
    const std::uint64_t r = uniform_below(rng, norm_exponent_);
    reps.push_back(f.add(gamma_, f.exp(i + class_count_ * r)));
  }
  return reps;
}

OreCtx OreCtx::inverse_zero_derivation() const {
  const unsigned m = field_->m();
  return OreCtx(field_, (m - theta_l_) % m, kZero);
}

}  // namespace sumrank
