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

#include "oracle.hpp"
#include "sumrank/linalg.hpp"

using namespace sumrank;

TEST_CASE("rref of trivial matrices") {
  auto f = Field::build(2, 1, 2);
  const auto id = rref(*f, Matrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.reduced == Matrix::identity(3));
  const auto z = rref(*f, Matrix(2, 3));
  CHECK(z.rank == 0);
  CHECK(z.reduced == Matrix(2, 3));
}

TEST_CASE("proportional rows have rank one") {
  auto f = Field::build(2, 1, 2);
  const Elem w = f->generator_z();
  const Elem w1 = f->add(w, kOne);
  const Elem winv = f->inv(w);
  const auto m = Matrix::from_rows({{w, w1}, {f->mul(winv, w), f->mul(winv, w1)}}, 2);
  CHECK(rank(*f, m) == 1);
}

TEST_CASE("rank agrees with span enumeration") {
  for (auto [p, m] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
    auto f = Field::build(p, 1, m);
    Rng rng(p * 10 + m);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + uniform_below(rng, 3);
      const std::size_t cols = 1 + uniform_below(rng, 4);
      Matrix a = random_matrix(*f, rows, cols, rng);
      // Force dependencies now and then.
      if (rows > 1 && trial % 3 == 0) {
        const Elem c = f->random(rng);
        for (std::size_t j = 0; j < cols; ++j) a(rows - 1, j) = f->mul(c, a(0, j));
      }
      CHECK(rank(*f, a) == oracle::brute_rank(*f, a));
    }
  }
}

TEST_CASE("right kernel") {
  auto f = Field::build(2, 1, 2);
  const Elem w = f->generator_z();
  CHECK(right_kernel(*f, Matrix::identity(3)).rows() == 0);
  CHECK(rank(*f, right_kernel(*f, Matrix(2, 3))) == 3);
  const auto k = right_kernel(*f, Matrix::from_rows({{kOne, w}}, 2));
  REQUIRE(k.rows() == 1);
  CHECK(rank(*f, vstack(k, Matrix::from_rows({{w, kOne}}, 2))) == 1);

  auto f9 = Field::build(3, 1, 2);
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = random_matrix(*f9, 2 + uniform_below(rng, 3), 6, rng);
    const Matrix ker = right_kernel(*f9, a);
    CHECK(ker.rows() + rank(*f9, a) == 6);
    const Matrix prod = multiply(*f9, a, ker.transposed());
    CHECK(rank(*f9, prod) == 0);
  }
}

TEST_CASE("sum and intersection dimensions") {
  auto f = Field::build(3, 1, 2);
  const Matrix a = Matrix::from_rows({{kOne, kZero, kZero, kZero}, {kZero, kOne, kZero, kZero}}, 4);
  const Matrix b = Matrix::from_rows({{kZero, kZero, kOne, kZero}, {kZero, kZero, kZero, kOne}}, 4);
  CHECK(row_space_sum(*f, a, b).dim() == 4);
  CHECK(row_space_intersection(*f, a, b).dim() == 0);
  CHECK(row_space_sum(*f, a, a).dim() == 2);
  CHECK(row_space_intersection(*f, a, a) == row_space(*f, a));

  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const Matrix x = random_matrix(*f, 2, 4, rng);
    const Matrix y = random_matrix(*f, 3, 4, rng);
    const auto sum = row_space_sum(*f, x, y).dim();
    const auto cap = row_space_intersection(*f, x, y);
    CHECK(sum + cap.dim() == rank(*f, x) + rank(*f, y));
    // Every intersection vector lies in both spaces.
    CHECK(rank(*f, vstack(x, cap.basis)) == rank(*f, x));
    CHECK(rank(*f, vstack(y, cap.basis)) == rank(*f, y));
  }
}

TEST_CASE("F_q expansion") {
  auto f = Field::build(2, 1, 2);
  const Elem w = f->generator_z();
  CHECK(rank_fq(*f, std::vector<Elem>{kZero, kZero}) == 0);
  CHECK(rank_fq(*f, std::vector<Elem>{kOne, w}) == 2);
  CHECK(rank_fq(*f, std::vector<Elem>{kOne, kOne}) == 1);
  const Matrix e = expand_over_fq(*f, std::vector<Elem>{kOne, w});
  CHECK(rank(*f, e) == 2);

  for (auto [p, s, m] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 2u}, {2u, 2u, 2u}}) {
    auto g = Field::build(p, s, m);
    Rng rng(p + s + m);
    for (int t = 0; t < 60; ++t) {
      std::vector<Elem> v(1 + uniform_below(rng, 3));
      for (auto& x : v) x = g->random(rng);
      if (t % 4 == 0 && v.size() > 1) v.back() = g->mul(g->random_subfield(rng), v.front());
      CHECK(rank_fq(*g, v) == oracle::brute_fq_rank(*g, v));
    }
  }
}

TEST_CASE("solve_linear") {
  auto f = Field::build(2, 1, 2);
  const Elem w = f->generator_z();
  const std::vector<Elem> b{w, kOne, kZero};
  CHECK(solve_linear(*f, Matrix::identity(3), b) == b);
  const auto inconsistent = Matrix::from_rows({{kOne, kOne}, {kOne, kOne}}, 2);
  CHECK_FALSE(solve_linear(*f, inconsistent, std::vector<Elem>{kOne, kZero}).has_value());
  const auto under = solve_linear(*f, Matrix::from_rows({{kOne, kOne}}, 2), std::vector<Elem>{kZero});
  REQUIRE(under.has_value());
  CHECK(*under == std::vector<Elem>{kZero, kZero});

  auto f9 = Field::build(3, 1, 2);
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = random_matrix(*f9, 3, 5, rng);
    std::vector<Elem> x(5);
    for (auto& e : x) e = f9->random(rng);
    const auto rhs = vec_mat(*f9, x, a.transposed());
    const auto sol = solve_linear(*f9, a, rhs);
    REQUIRE(sol.has_value());
    CHECK(vec_mat(*f9, *sol, a.transposed()) == rhs);
  }
}

TEST_CASE("random invertible matrices") {
  auto f = Field::build(2, 2, 2);
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    CHECK(rank(*f, random_invertible(*f, 4, rng)) == 4);
    const Matrix m = random_invertible_fq(*f, 3, rng);
    CHECK(rank(*f, m) == 3);
    for (Elem e : m.data()) CHECK(f->in_subfield(e));
  }
}
