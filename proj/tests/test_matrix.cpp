// Copyright 2026 The ytwist authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "ytwist/matrix.hpp"

using namespace ytwist;

namespace {

Matrix unit(size_t dim, size_t r, size_t c) {
  Matrix m(dim, dim);
  m.at(r, c) = GaussRational::one();
  return m;
}

struct Rng {
  uint64_t state = 0x2545f4914f6cdd1dull;
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  GaussRational scalar() {
    long re = static_cast<long>(next() % 7) - 3;
    long im = static_cast<long>(next() % 7) - 3;
    return GaussRational(Rational(re), Rational(im));
  }
  Matrix matrix(size_t rows, size_t cols) {
    Matrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
      for (size_t c = 0; c < cols; ++c) m.at(r, c) = scalar();
    }
    return m;
  }
  // strictly upper triangular, hence nilpotent
  Matrix nilpotent(size_t dim) {
    Matrix m(dim, dim);
    for (size_t r = 0; r < dim; ++r) {
      for (size_t c = r + 1; c < dim; ++c) m.at(r, c) = scalar();
    }
    return m;
  }
};

}  // namespace

TEST_CASE("matmul basics") {
  Rng rng;
  Matrix x = rng.matrix(5, 5);
  CHECK(Matrix::identity(5) * x == x);

  // Okubo square: M12 * M12 = -(e11 + e22)
  Matrix m12 = unit(5, 0, 1) - unit(5, 1, 0);
  Matrix expected = -(unit(5, 0, 0) + unit(5, 1, 1));
  CHECK(m12 * m12 == expected);

  CHECK(unit(3, 0, 1) * unit(3, 1, 0) == unit(3, 0, 0));

  CHECK_THROWS_AS(rng.matrix(2, 3) * rng.matrix(2, 3), Error);
}

TEST_CASE("kron basics and the mixed-product identity") {
  CHECK(kron(Matrix::identity(3), Matrix::identity(4)) ==
        Matrix::identity(12));

  Matrix k = kron(unit(2, 0, 1), unit(2, 1, 0));
  Matrix expected(4, 4);
  expected.at(0 * 2 + 1, 1 * 2 + 0) = GaussRational::one();
  CHECK(k == expected);

  Rng rng;
  for (int t = 0; t < 25; ++t) {
    Matrix a = rng.matrix(2, 2), b = rng.matrix(3, 3);
    Matrix c = rng.matrix(2, 2), d = rng.matrix(3, 3);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("embed_leg placements") {
  Rng rng;
  Matrix x = rng.matrix(2, 2), y = rng.matrix(2, 2);
  Matrix xy = kron(x, y);

  // flip: X (x) Y placed as legs (2,1) is Y (x) X
  CHECK(embed_leg(xy, TensorLeg{{2, 2}}, {2, 1}) == kron(y, x));
  CHECK(flip_tensor_square(xy) == kron(y, x));

  // legs (1,3) of a three-leg space: X (x) I (x) Y
  CHECK(embed_leg(xy, TensorLeg{{2, 2, 2}}, {1, 3}) ==
        kron(x, kron(Matrix::identity(2), y)));

  // conjugation by the permutation matrix is the flip
  Matrix p = permutation_matrix(2);
  CHECK(p * xy * p == kron(y, x));
  CHECK(p * p == Matrix::identity(4));

  // the flip placement is an involution
  Matrix z = rng.matrix(9, 9);
  CHECK(flip_tensor_square(flip_tensor_square(z)) == z);

  CHECK_THROWS_AS(embed_leg(xy, TensorLeg{{2, 2}}, {1, 3}), Error);
}

TEST_CASE("commutator basics") {
  Rng rng;
  Matrix x = rng.matrix(4, 4);
  CHECK(commutator(x, x).is_zero());
  CHECK(commutator(unit(3, 0, 0), unit(3, 0, 1)) == unit(3, 0, 1));
  CHECK_THROWS_AS(commutator(rng.matrix(2, 2), rng.matrix(3, 3)), Error);
}

TEST_CASE("nilpotency index") {
  CHECK(nilpotency_index(Matrix(4, 4)) == 1);
  CHECK(nilpotency_index(unit(3, 0, 1)) == 2);
  CHECK(nilpotency_index(Matrix::identity(3)) == std::nullopt);

  Matrix shift(4, 4);
  for (size_t i = 0; i + 1 < 4; ++i) {
    shift.at(i, i + 1) = GaussRational::one();
  }
  CHECK(nilpotency_index(shift) == 4);
}

TEST_CASE("unipotent exp and log") {
  CHECK(unipotent_exp(Matrix(4, 4)) == Matrix::identity(4));
  CHECK(unipotent_exp(unit(4, 0, 1)) ==
        Matrix::identity(4) + unit(4, 0, 1));
  CHECK(unipotent_log(Matrix::identity(4)).is_zero());
  CHECK(unipotent_log(Matrix::identity(4) + unit(4, 0, 1)) == unit(4, 0, 1));

  CHECK_THROWS_AS(unipotent_exp(Matrix::identity(2)), Error);
  CHECK_THROWS_AS(unipotent_log(Matrix(2, 2)), Error);

  Rng rng;
  for (int t = 0; t < 20; ++t) {
    Matrix n = rng.nilpotent(5);
    CHECK(unipotent_log(unipotent_exp(n)) == n);
    Matrix u = Matrix::identity(5) + rng.nilpotent(5);
    CHECK(unipotent_exp(unipotent_log(u)) == u);
  }
}

TEST_CASE("unipotent rational powers") {
  Matrix u = Matrix::identity(3) + unit(3, 0, 1);
  CHECK(unipotent_pow(u, Rational(0)) == Matrix::identity(3));
  Matrix expected = Matrix::identity(3);
  expected.at(0, 1) = GaussRational(Rational(-1, 2));
  CHECK(unipotent_pow(u, Rational(-1, 2)) == expected);

  Rng rng;
  for (int t = 0; t < 20; ++t) {
    Matrix v = Matrix::identity(5) + rng.nilpotent(5);
    Matrix half = unipotent_pow(v, Rational(1, 2));
    CHECK(half * half == v);
    Rational a(3, 2), b(-5, 3);
    CHECK(unipotent_pow(v, a) * unipotent_pow(v, b) ==
          unipotent_pow(v, a + b));
    CHECK(unipotent_pow(v, Rational(-1)) * v == Matrix::identity(5));
  }
}

TEST_CASE("polynomial coefficient extraction") {
  // f(x) = C0 + C1 x + C3 x^3 with fixed matrices
  Rng rng;
  Matrix c0 = rng.matrix(3, 3), c1 = rng.matrix(3, 3), c3 = rng.matrix(3, 3);
  auto eval = [&](const Rational& x) {
    GaussRational xs{x};
    return c0 + xs * c1 + (xs * xs * xs) * c3;
  };
  auto coeffs = polynomial_matrix_coefficients(eval, 5);
  REQUIRE(coeffs.size() == 6);
  CHECK(coeffs[0] == c0);
  CHECK(coeffs[1] == c1);
  CHECK(coeffs[2].is_zero());
  CHECK(coeffs[3] == c3);
  CHECK(coeffs[4].is_zero());
  CHECK(coeffs[5].is_zero());
}

TEST_CASE("first difference is lexicographically first") {
  Matrix a(3, 3), b(3, 3);
  b.at(1, 0) = GaussRational::one();
  b.at(0, 2) = GaussRational::one();
  auto diff = first_difference(a, b);
  REQUIRE(diff.has_value());
  CHECK(diff->row == 0);
  CHECK(diff->col == 2);
  CHECK(first_difference(a, a) == std::nullopt);
}
