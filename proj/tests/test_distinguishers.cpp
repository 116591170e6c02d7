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

#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "sumrank/distinguishers.hpp"
#include "sumrank/error.hpp"
#include "sumrank/isometry.hpp"

using namespace sumrank;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::MalformedInput;
}

// Size of the span of all pairwise star products, by closure.
std::size_t oracle_square_dim(const Field& f, const Matrix& g) {
  std::vector<std::vector<Elem>> products;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i; j < g.rows(); ++j) {
      std::vector<Elem> v(g.cols());
      for (std::size_t c = 0; c < g.cols(); ++c) v[c] = f.mul(g(i, c), g(j, c));
      products.push_back(v);
    }
  }
  return oracle::log_base(oracle::span_size(f, products, g.cols()), f.order());
}

Matrix random_full_rank(const Field& f, std::size_t k, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix g = random_matrix(f, k, n, rng);
    if (rank(f, g) == k) return g;
  }
}

}  // namespace

TEST_CASE("star product") {
  auto f = Field::build(2, 1, 2);
  const Elem w = f->generator_z();
  const std::vector<Elem> x{kOne, w};
  CHECK(star_product(*f, x, std::vector<Elem>{kOne, kOne}) == x);
  CHECK(star_product(*f, x, std::vector<Elem>{w, w}) == std::vector<Elem>{w, f->mul(w, w)});
  CHECK(star_product(*f, x, std::vector<Elem>{w, kOne}) == star_product(*f, std::vector<Elem>{w, kOne}, x));
}

TEST_CASE("square code of the identity-automorphism instance") {
  auto f = Field::build(2, 1, 3);
  const OreCtx id(f, 0);
  const Elem z = f->generator_z();
  const GlrsParams p{id, Composition({2, 2, 2}), {}, {kOne, z, f->mul(z, z)}, {kOne, kOne, kOne}, 2};
  auto q = p;
  q.beta = {kOne, z, kOne, z, kOne, z};
  const Matrix g = canonical_generator(q);
  CHECK(square_code_dim(*f, g) == 3);
  CHECK(oracle_square_dim(*f, g) == 3);
  CHECK(square_code_dim(*f, Matrix::row_vector(std::vector<Elem>{kOne, z, z})) == 1);
  CHECK(code_of([&] { square_distinguisher(*f, g, q.comp); }) == Errc::PreconditionViolated);
}

TEST_CASE("square distinguisher on identity-automorphism codes") {
  auto f = Field::build(2, 1, 3);
  const OreCtx id(f, 0);
  const Composition comp({1, 2, 1, 2, 1, 1});
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    const auto p = random_glrs(id, comp, 3, rng, Multipliers::Random);
    const Disguise d = random_disguise(p, rng, false);
    const Verdict v = square_distinguisher(*f, d.public_g, comp);
    CHECK(v.structured);
    CHECK(v.statistic == 5);
    CHECK(v.baseline == 6);
    CHECK(v.certainty == Certainty::Probable);
  }
  std::size_t flagged = 0;
  for (int t = 0; t < 50; ++t) {
    const Matrix r = random_full_rank(*f, 3, comp.n(), rng);
    const Verdict v = square_distinguisher(*f, r, comp);
    if (t < 5) CHECK(v.statistic == oracle_square_dim(*f, r));
    flagged += v.structured;
  }
  CHECK(flagged <= 5);
}

TEST_CASE("Overbeck distinguisher on the GF(9) instance") {
  auto f = Field::build(3, 1, 2);
  const OreCtx ore(f, 1);
  const Elem g = f->primitive();
  const GlrsParams p{ore, Composition({2, 2}), {kOne, g, kOne, g}, {kOne, g}, {kOne, kOne}, 2};
  const Matrix gen = canonical_generator(p);
  const Verdict v = overbeck_distinguisher(ore, gen, p.a, p.comp, 1);
  CHECK(v.statistic == 3);
  CHECK(v.structured);
  CHECK(v.baseline == 4);
  CHECK(oracle::brute_rank(*f, gamma_stack(ore, gen, p.a, p.comp, 1)) == 3);
  CHECK(default_overbeck_j(2, 4) == 1);
  CHECK(code_of([] { default_overbeck_j(1, 4); }) == Errc::NoValidJ);
  CHECK(code_of([&] { overbeck_distinguisher(ore, gen, p.a, p.comp, 3); }) == Errc::BadJ);

  Rng rng(32);
  for (int t = 0; t < 40; ++t) {
    const Disguise d = random_disguise(p, rng, t % 2 == 0);
    const GlrsParams image = transport_params(d.iso, p);
    std::vector<Elem> inv(image.v.size());
    for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = f->inv(image.v[i]);
    const Verdict dv = overbeck_distinguisher(image.ore, scale_blocks(*f, d.public_g, inv, p.comp), image.a, p.comp);
    CHECK(dv.structured);
  }
  std::size_t full = 0;
  for (int t = 0; t < 100; ++t) {
    full += overbeck_distinguisher(ore, random_full_rank(*f, 2, 4, rng), p.a, p.comp, 1).statistic == 4;
  }
  // Over nine elements a random 2x4 stack is singular about a fifth of the time.
  CHECK(full >= 65);
}

TEST_CASE("stack ranks for every depth") {
  auto f = Field::build(2, 2, 3);
  const OreCtx ore(f, 2);
  const Composition comp({3, 2, 3});
  Rng rng(33);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_glrs(ore, comp, 1 + uniform_below(rng, 7), rng);
    const Matrix g = canonical_generator(p);
    for (std::size_t j = 0; j + p.k <= comp.n(); ++j) {
      CHECK(overbeck_distinguisher(ore, g, p.a, comp, j).statistic == p.k + j);
    }
  }
}

TEST_CASE("intersection chain") {
  auto f = Field::build(3, 1, 2);
  const OreCtx ore(f, 1);
  const Elem g = f->primitive();
  const GlrsParams p{ore, Composition({2, 2}), {kOne, g, kOne, g}, {kOne, g}, {kOne, kOne}, 2};
  const Matrix gen = canonical_generator(p);
  CHECK(intersection_chain(ore, gen, p.a, p.comp, 0) == 2);
  CHECK(intersection_chain(ore, gen, p.a, p.comp, 1) == 1);
  const Verdict v = intersection_distinguisher(ore, gen, p.a, p.comp);
  CHECK(v.structured);
  CHECK(v.baseline == 0);
  CHECK(code_of([&] { intersection_chain(ore, gen, p.a, p.comp, 2); }) == Errc::BadJ);

  auto f64 = Field::build(2, 2, 3);
  const OreCtx ore64(f64, 1);
  const Composition comp({3, 3, 2});
  Rng rng(34);
  for (int t = 0; t < 20; ++t) {
    const auto q = random_glrs(ore64, comp, 2 + uniform_below(rng, 6), rng);
    const Matrix gq = canonical_generator(q);
    for (std::size_t j = 0; j < q.k; ++j) CHECK(intersection_chain(ore64, gq, q.a, comp, j) == q.k - j);
  }
}

TEST_CASE("multiplier sweep") {
  auto f = Field::build(3, 1, 2);
  const OreCtx ore(f, 1);
  const Elem g = f->primitive();
  GlrsParams p{ore, Composition({2, 2}), {kOne, g, kOne, g}, {kOne, g}, {kOne, kOne}, 2};
  const SweepResult lrs = glrs_multiplier_sweep(ore, canonical_generator(p), p.a, p.comp, std::nullopt, 100);
  CHECK(lrs.candidates_tried == 1);
  CHECK(lrs.v == p.v);

  p.v = {kOne, g};
  const SweepResult glrs = glrs_multiplier_sweep(ore, canonical_generator(p), p.a, p.comp, std::nullopt, 100);
  CHECK(glrs.verdict.structured);
  CHECK(glrs.v == p.v);

  Rng rng(35);
  const Matrix r = random_full_rank(*f, 2, 4, rng);
  CHECK(code_of([&] { glrs_multiplier_sweep(ore, r, p.a, p.comp, 1, 2); }) == Errc::BudgetExhausted);
}

TEST_CASE("certainty labels") {
  CHECK(certainty_name(Certainty::Certain) == "certain");
  CHECK(certainty_name(Certainty::Probable) == "probable");
  CHECK(certainty_name(Certainty::Inconclusive) == "inconclusive");
  auto f = Field::build(3, 1, 2);
  const OreCtx ore(f, 1);
  const Elem g = f->primitive();
  // k = n − 1 gives a full-rank stack either way.
  const GlrsParams p{ore, Composition({2, 2}), {kOne, g, kOne, g}, {kOne, g}, {kOne, kOne}, 3};
  const Verdict v = overbeck_distinguisher(ore, canonical_generator(p), p.a, p.comp, 1);
  CHECK(v.structured);
  CHECK(v.certainty == Certainty::Inconclusive);
}
