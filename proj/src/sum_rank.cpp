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

#include "sumrank/sum_rank.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "sumrank/error.hpp"

namespace sumrank {

Composition::Composition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(Errc::MalformedInput, "composition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw Error(Errc::MalformedInput, "composition parts must be positive");
    offsets_.push_back(n_);
    for (std::size_t j = 0; j < parts_[i]; ++j) block_of_.push_back(i);
    n_ += parts_[i];
  }
}

std::vector<std::size_t> lambda_of(const Composition& comp) {
  std::vector<std::size_t> values;
  std::vector<std::size_t> counts;
  for (auto part : comp.parts()) {
    auto it = std::find(values.begin(), values.end(), part);
    if (it == values.end()) {
      values.push_back(part);
      counts.push_back(1);
    } else {
      ++counts[static_cast<std::size_t>(it - values.begin())];
    }
  }
  return counts;
}

std::size_t sum_rank_weight(const Field& f, std::span<const Elem> x, const Composition& comp) {
  if (x.size() != comp.n()) throw Error(Errc::ShapeMismatch, "vector length differs from composition");
  std::size_t wt = 0;
  for (std::size_t i = 0; i < comp.ell(); ++i) wt += rank_fq(f, comp.block(x, i));
  return wt;
}

std::size_t sum_rank_dist(const Field& f, std::span<const Elem> x, std::span<const Elem> y,
                          const Composition& comp) {
  if (x.size() != y.size()) throw Error(Errc::ShapeMismatch, "distance between vectors of different length");
  std::vector<Elem> diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = f.sub(x[i], y[i]);
  return sum_rank_weight(f, diff, comp);
}

std::vector<Elem> random_full_weight_vector(const Field& f, const Composition& comp, Rng& rng) {
  std::vector<Elem> x(comp.n());
  for (std::size_t i = 0; i < comp.ell(); ++i) {
    if (comp.part(i) > f.m()) {
      throw Error(Errc::PartExceedsM, "block length " + std::to_string(comp.part(i)) + " exceeds m");
    }
    auto block = comp.block(std::span<Elem>(x), i);
    do {
      for (auto& e : block) e = f.random(rng);
    } while (rank_fq(f, block) != block.size());
  }
  return x;
}

std::uint64_t enumeration_guard() {
  if (const char* env = std::getenv("SUMRANK_SIZE_GUARD")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::uint64_t{1} << 16;
}

std::size_t min_distance_bruteforce(const Field& f, const Matrix& g, const Composition& comp) {
  const std::size_t k = g.rows();
  if (k == 0) throw Error(Errc::BadDimension, "code dimension must be positive");
  if (g.cols() != comp.n()) throw Error(Errc::ShapeMismatch, "generator width differs from composition");
  std::uint64_t total = 1;
  const std::uint64_t guard = enumeration_guard();
  for (std::size_t i = 0; i < k; ++i) {
    if (total > guard / f.order()) throw Error(Errc::SizeGuardExceeded, "too many codewords to enumerate");
    total *= f.order();
  }
  if (total > guard) throw Error(Errc::SizeGuardExceeded, "too many codewords to enumerate");

  // Odometer over messages; the codeword is updated incrementally by the
  // change in one message coordinate.
  std::vector<std::uint32_t> msg(k, 0);
  std::vector<Elem> cw(g.cols(), kZero);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t pos = 0;
    while (msg[pos] + 1 == f.order()) {
      // wraps from order-1 back to 0: subtract (order-1)·row
      const Elem old(msg[pos]);
      for (std::size_t c = 0; c < cw.size(); ++c) cw[c] = f.sub(cw[c], f.mul(old, g(pos, c)));
      msg[pos] = 0;
      ++pos;
    }
    const Elem old(msg[pos]);
    const Elem next(msg[pos] + 1);
    const Elem delta = f.sub(next, old);
    for (std::size_t c = 0; c < cw.size(); ++c) cw[c] = f.add(cw[c], f.mul(delta, g(pos, c)));
    msg[pos] += 1;
    const std::size_t wt = sum_rank_weight(f, cw, comp);
    if (wt < best) best = wt;
  }
  return best;
}

}  // namespace sumrank
