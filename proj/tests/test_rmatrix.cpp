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

#include "ytwist/rmatrix.hpp"

using namespace ytwist;

namespace {

Root rt(std::vector<int> c) { return Root(std::move(c)); }

ChainSpec spec_b(int n, int p, Rational xi, std::vector<Rational> etas = {}) {
  if (etas.empty()) etas.assign(p + 1, Rational(1));
  return build_chain_spec(Series::B, n, p, xi, etas);
}

}  // namespace

TEST_CASE("rho for rank 2 is H (x) E + E1 (x) E2") {
  RepTable t = RepTable::build(Series::B, 2);
  RhoMatrix rho = rho_matrix(spec_b(2, 0, Rational(1)), t);
  Matrix expected = kron(t.cartan(1, 2), t.generator(rt({1, 1}))) +
                    kron(t.generator(rt({1, 0})), t.generator(rt({0, 1})));
  CHECK(rho.rho == expected);
  CHECK(rho.rho_flip == flip_tensor_square(rho.rho));
}

TEST_CASE("rho carries eta but not xi") {
  RepTable t = RepTable::build(Series::B, 3);
  Matrix a = rho_matrix(spec_b(3, 0, Rational(1)), t).rho;
  Matrix b = rho_matrix(spec_b(3, 0, Rational(7, 2)), t).rho;
  CHECK(a == b);
  Matrix c = rho_matrix(spec_b(3, 0, Rational(1), {Rational(3)}), t).rho;
  CHECK(c == GaussRational(Rational(3)) * a);
}

TEST_CASE("rho cubes to zero") {
  for (int n : {2, 3}) {
    RepTable t = RepTable::build(Series::B, n);
    Matrix rho = rho_matrix(spec_b(n, 0, Rational(1)), t).rho;
    CHECK((rho * rho * rho).is_zero());
    CHECK(nilpotency_index(rho) == 3);
  }
}

TEST_CASE("classical r-matrix is the antisymmetrized rho") {
  RepTable t = RepTable::build(Series::B, 2);
  ChainSpec spec = spec_b(2, 0, Rational(1));
  Matrix r = classical_r(spec, t);
  CHECK(flip_tensor_square(r) == -r);

  auto wedge = [](const Matrix& x, const Matrix& y) {
    return kron(x, y) - kron(y, x);
  };
  Matrix expected = wedge(t.cartan(1, 2), t.generator(rt({1, 1}))) +
                    wedge(t.generator(rt({1, 0})), t.generator(rt({0, 1})));
  CHECK(r == expected);
}

TEST_CASE("twisted R at xi = 0 is the identity") {
  RepTable t = RepTable::build(Series::B, 2);
  CHECK(twisted_R(spec_b(2, 0, Rational(0)), t) == Matrix::identity(25));
  CHECK(lemma_R(spec_b(2, 0, Rational(0)), t) == Matrix::identity(25));
}

TEST_CASE("first order of twisted R is minus the classical r-matrix") {
  RepTable t = RepTable::build(Series::B, 2);
  auto eval = [&](const Rational& xi) { return twisted_R(spec_b(2, 0, xi), t); };
  auto coeffs = polynomial_matrix_coefficients(eval, 8);
  ChainSpec spec = spec_b(2, 0, Rational(1));
  CHECK(coeffs[0] == Matrix::identity(25));
  CHECK(coeffs[1] == -classical_r(spec, t));
}

TEST_CASE("closed form equals the factor-wise R at depth 0") {
  for (int n : {2, 3}) {
    RepTable t = RepTable::build(Series::B, n);
    for (Rational xi : {Rational(1), Rational(-1, 2)}) {
      ChainSpec spec = spec_b(n, 0, xi);
      CHECK(lemma_R(spec, t) == twisted_R(spec, t));
    }
  }
}

TEST_CASE("closed form differs from the factor-wise R at depth 1") {
  // recorded adjudication: the quadratic closed form built from the
  // full-chain rho reproduces R factor-wise (depth 0) but not for a
  // two-level chain, where the cross-level corrections survive.
  RepTable t = RepTable::build(Series::B, 4);
  ChainSpec spec = spec_b(4, 1, Rational(1), {Rational(1), Rational(1)});
  Matrix lhs = lemma_R(spec, t);
  Matrix rhs = twisted_R(spec, t);
  auto diff = first_difference(lhs, rhs);
  REQUIRE(diff.has_value());
  CHECK(diff->row == 2);
  CHECK(diff->col == 42);
  // the chain element itself is not exp(xi rho) across levels either
  Matrix chain = chain_element(spec, t);
  CHECK(chain != unipotent_exp(GaussRational(spec.xi) *
                               rho_matrix(spec, t).rho));
}

TEST_CASE("P and K identities") {
  for (size_t dim : {3u, 5u, 7u}) {
    auto [p, k] = p_and_k(dim);
    CHECK(p * p == Matrix::identity(dim * dim));
    CHECK(p * k == k);
    CHECK(k * p == k);
    CHECK(k * k == GaussRational(Rational(dim)) * k);
    // P acts as the flip on product vectors: P (a (x) b) P = b (x) a
    Matrix a(dim, dim), b(dim, dim);
    a.at(0, 1) = GaussRational::one();
    b.at(2, 0) = GaussRational::one();
    CHECK(p * kron(a, b) * p == kron(b, a));
  }
  CHECK_THROWS_AS(p_and_k(1), Error);
}

TEST_CASE("undeformed spectral R-matrix has the closed form") {
  RepTable t = RepTable::build(Series::B, 2);
  SpectralRMatrix sp = make_spectral(spec_b(2, 0, Rational(0)), t);
  CHECK(sp.kappa_shift == Rational(3, 2));
  CHECK(sp.F == Matrix::identity(25));
  Rational u(4, 3);
  Matrix expected = GaussRational(u) * Matrix::identity(25) + sp.P;
  Rational c = u / (u + sp.kappa_shift);
  expected -= GaussRational(c) * sp.K;
  CHECK(sp.at(u) == expected);
}

TEST_CASE("spectral R at u = 0 is the permutation") {
  RepTable t = RepTable::build(Series::B, 2);
  for (Rational xi : {Rational(0), Rational(1)}) {
    SpectralRMatrix sp = make_spectral(spec_b(2, 0, xi), t);
    CHECK(sp.at(Rational(0)) == sp.P);
  }
}

TEST_CASE("spectral pole is rejected") {
  RepTable t = RepTable::build(Series::B, 2);
  SpectralRMatrix sp = make_spectral(spec_b(2, 0, Rational(1)), t);
  CHECK_THROWS_AS(sp.at(Rational(-3, 2)), Error);
}

TEST_CASE("spectral construction requires series B") {
  RepTable t = RepTable::build(Series::D, 4);
  ChainSpec spec = build_chain_spec(Series::D, 4, 0, Rational(1),
                                    {Rational(1)});
  CHECK_THROWS_AS(make_spectral(spec, t), Error);
}

TEST_CASE("truncated spectral matrix matches the exact one at depth 0") {
  for (int n : {2, 3}) {
    RepTable t = RepTable::build(Series::B, n);
    for (Rational xi : {Rational(0), Rational(1)}) {
      ChainSpec spec = spec_b(n, 0, xi);
      SpectralRMatrix sp = make_spectral(spec, t);
      RhoMatrix rho = rho_matrix(spec, t);
      for (Rational u : {Rational(0), Rational(1), Rational(5, 2)}) {
        CHECK(yangian_R_truncated(rho, xi, sp.kappa_shift, u) == sp.at(u));
      }
    }
  }
}

TEST_CASE("truncated spectral matrix rejects the pole") {
  RepTable t = RepTable::build(Series::B, 2);
  ChainSpec spec = spec_b(2, 0, Rational(1));
  RhoMatrix rho = rho_matrix(spec, t);
  CHECK_THROWS_AS(
      yangian_R_truncated(rho, Rational(1), Rational(3, 2), Rational(-3, 2)),
      Error);
}
