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

#include "ytwist/rmatrix.hpp"

#include <string>

namespace ytwist {

RhoMatrix rho_matrix(const ChainSpec& spec, const RepTable& table) {
  const size_t d = table.dim();
  Matrix rho(d * d, d * d);
  for (int k = 0; k <= spec.p; ++k) {
    TwistFactorMatrices f = factor_matrices(spec, k, table);
    rho += f.rho_level(spec.levels[k].eta);
  }
  RhoMatrix out;
  out.rho_flip = flip_tensor_square(rho);
  out.rho = std::move(rho);
  return out;
}

Matrix classical_r(const ChainSpec& spec, const RepTable& table) {
  RhoMatrix m = rho_matrix(spec, table);
  return m.rho - m.rho_flip;
}

Matrix twisted_R(const ChainSpec& spec, const RepTable& table) {
  const size_t d = table.dim();
  std::vector<Matrix> factors;
  for (int k = 0; k <= spec.p; ++k) {
    TwistFactorMatrices f = factor_matrices(spec, k, table);
    factors.push_back(f.extension * f.jordanian);
  }
  Matrix r = Matrix::identity(d * d);
  for (int k = spec.p; k >= 0; --k) {
    r = r * flip_tensor_square(factors[k]);
  }
  for (int k = 0; k <= spec.p; ++k) {
    r = r * unipotent_pow(factors[k], Rational(-1));
  }
  return r;
}

namespace {

// I + xi T + (xi^2/2) T^2 for nilpotent-cubed T.
Matrix quadratic_exponential(const Matrix& t, const Rational& xi) {
  Matrix out = Matrix::identity(t.rows());
  out += GaussRational(xi) * t;
  Rational half_sq = xi * xi / 2;
  out += GaussRational(half_sq) * (t * t);
  return out;
}

}  // namespace

Matrix lemma_R(const ChainSpec& spec, const RepTable& table) {
  RhoMatrix m = rho_matrix(spec, table);
  Matrix left = quadratic_exponential(m.rho_flip, spec.xi);
  Matrix right = quadratic_exponential(m.rho, -spec.xi);
  return left * right;
}

std::pair<Matrix, Matrix> p_and_k(size_t dim) {
  if (dim < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "p_and_k: dimension must be at least 2");
  }
  Matrix p = permutation_matrix(dim);
  Matrix k(dim * dim, dim * dim);
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < dim; ++j) {
      k.at(i * dim + i, j * dim + j) = GaussRational::one();
    }
  }
  return {std::move(p), std::move(k)};
}

Matrix SpectralRMatrix::at(const Rational& u) const {
  if (u == -kappa_shift) {
    throw Error(ErrorKind::Domain,
                "spectral parameter hits the pole u = " +
                    print_rational(-kappa_shift));
  }
  Matrix r = GaussRational(u) * RF;
  r += P;
  Rational c = u / (u + kappa_shift);
  r -= GaussRational(c) * (F21 * (K * Finv));
  return r;
}

SpectralRMatrix make_spectral(const ChainSpec& spec, const RepTable& table) {
  if (spec.series != Series::B) {
    throw Error(ErrorKind::InvalidArgument,
                "the spectral R-matrix is defined for series B only");
  }
  SpectralRMatrix sp;
  sp.dim = table.dim();
  sp.kappa_shift = Rational(2 * spec.N - 1, 2);
  sp.kappa_shift.canonicalize();
  sp.F = chain_element(spec, table);
  sp.F21 = flip_tensor_square(sp.F);
  sp.Finv = chain_element_inverse(spec, table);
  sp.RF = twisted_R(spec, table);
  auto [p, k] = p_and_k(sp.dim);
  sp.P = std::move(p);
  sp.K = std::move(k);
  return sp;
}

Matrix yangian_R_truncated(const RhoMatrix& rho, const Rational& xi,
                           const Rational& kappa, const Rational& u) {
  if (u == -kappa) {
    throw Error(ErrorKind::Domain,
                "spectral parameter hits the pole u = " +
                    print_rational(-kappa));
  }
  const size_t n = rho.rho.rows();
  size_t dim = 1;
  while (dim * dim < n) ++dim;
  Matrix f21q = quadratic_exponential(rho.rho_flip, xi);
  Matrix finvq = quadratic_exponential(rho.rho, -xi);
  auto [p, k] = p_and_k(dim);
  Matrix r = GaussRational(u) * (f21q * finvq);
  r += p;
  Rational c = u / (u + kappa);
  r -= GaussRational(c) * (f21q * (k * finvq));
  return r;
}

}  // namespace ytwist
