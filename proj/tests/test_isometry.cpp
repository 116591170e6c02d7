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

#include "sumrank/error.hpp"
#include "sumrank/isometry.hpp"

using namespace sumrank;

TEST_CASE("identity and block swap") {
  auto f = Field::build(3, 1, 2);
  const Composition comp({2, 2});
  const Elem g = f->primitive();
  const std::vector<Elem> x{kOne, g, f->pow(g, 2), f->pow(g, 3)};
  CHECK(apply_linear(*f, LinearIsometry::identity(comp), x, comp) == x);
  CHECK(apply_semilinear(*f, SemilinearIsometry::identity(comp), x, comp) == x);

  LinearIsometry swap = LinearIsometry::identity(comp);
  swap.pi = {1, 0};
  CHECK(apply_linear(*f, swap, x, comp) == std::vector<Elem>{x[2], x[3], x[0], x[1]});

  const SemilinearIsometry frob{LinearIsometry::identity(comp), 1};
  CHECK(apply_semilinear(*f, frob, std::vector<Elem>(4, kZero), comp) == std::vector<Elem>(4, kZero));
  CHECK(apply_semilinear(*f, frob, x, comp)[1] == f->pow(g, 3));
}

TEST_CASE("isometry checks") {
  auto f = Field::build(3, 1, 2);
  const Composition comp({2, 1});
  auto code_of = [&](const LinearIsometry& iso) {
    try {
      check_isometry(*f, iso, comp);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::MalformedInput;
  };
  LinearIsometry iso = LinearIsometry::identity(comp);
  iso.pi = {1, 0};
  CHECK(code_of(iso) == Errc::LengthClassViolation);
  iso = LinearIsometry::identity(comp);
  iso.c[0] = kZero;
  CHECK(code_of(iso) == Errc::ZeroMultiplier);
  iso = LinearIsometry::identity(comp);
  iso.M[1](0, 0) = f->primitive();
  CHECK(code_of(iso) == Errc::PreconditionViolated);
  iso = LinearIsometry::identity(comp);
  iso.M[0](1, 1) = kZero;
  CHECK(code_of(iso) == Errc::PreconditionViolated);
  iso = LinearIsometry::identity(comp);
  iso.c.pop_back();
  CHECK(code_of(iso) == Errc::ShapeMismatch);
}

TEST_CASE("random isometries preserve the sum-rank weight") {
  auto f = Field::build(2, 2, 2);
  const Composition comp({2, 1, 2, 1});
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    const auto iso = random_isometry(*f, comp, rng, t % 2 == 1);
    CHECK_NOTHROW(check_isometry(*f, iso.lin, comp));
    std::vector<Elem> x(comp.n());
    for (auto& e : x) e = uniform_below(rng, 2) ? f->random(rng) : kZero;
    CHECK(sum_rank_weight(*f, apply_semilinear(*f, iso, x, comp), comp) == sum_rank_weight(*f, x, comp));
  }
}

TEST_CASE("composition matches sequential application") {
  auto f = Field::build(2, 1, 4);
  const Composition comp({3, 3, 2});
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const auto outer = random_isometry(*f, comp, rng, true);
    const auto inner = random_isometry(*f, comp, rng, true);
    std::vector<Elem> x(comp.n());
    for (auto& e : x) e = f->random(rng);
    const auto both = compose(*f, outer, inner);
    CHECK(apply_semilinear(*f, both, x, comp) ==
          apply_semilinear(*f, outer, apply_semilinear(*f, inner, x, comp), comp));
  }
}

TEST_CASE("transport predicts the image code") {
  auto f = Field::build(2, 2, 3);
  const Composition comp({3, 2, 3});
  Rng rng(16);
  for (int t = 0; t < 60; ++t) {
    const Elem gamma = t % 3 == 0 ? kZero : f->random(rng);
    const OreCtx ore(f, 1 + uniform_below(rng, 2), gamma);
    const auto p = random_glrs(ore, comp, 1 + uniform_below(rng, comp.n()), rng, Multipliers::Random);
    const auto iso = random_isometry(*f, comp, rng, true);
    const auto image = transport_params(iso, p);
    CHECK(image.ore.gamma() == f->frobenius(gamma, iso.aut_t));
    CHECK(same_row_space(*f, canonical_generator(image), apply_to_rows(*f, iso, canonical_generator(p), comp)));
  }
  const auto p = random_glrs(OreCtx(f, 1), comp, 3, rng);
  const auto same = transport_params(SemilinearIsometry::identity(comp), p);
  CHECK(same.beta == p.beta);
  CHECK(same.a == p.a);
  CHECK(same.v == p.v);
  CHECK(same.ore.zero_derivation());
}

TEST_CASE("disguised generators") {
  auto f = Field::build(3, 1, 2);
  const OreCtx ore(f, 1);
  const Composition comp({2, 2});
  Rng rng(18);
  for (int t = 0; t < 40; ++t) {
    const auto p = random_glrs(ore, comp, 1 + uniform_below(rng, 3), rng);
    const Disguise d = random_disguise(p, rng, t % 2 == 0);
    CHECK(rank(*f, d.public_g) == p.k);
    CHECK(same_row_space(*f, d.public_g, canonical_generator(transport_params(d.iso, p))));
  }
}
