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

#ifndef YTWIST_RMATRIX_HPP
#define YTWIST_RMATRIX_HPP

#include <utility>

#include "ytwist/chain.hpp"

namespace ytwist {

// rho and its tensor flip. rho is the first-order coefficient of the
// chain element in xi: eta-weighted, xi-independent.
struct RhoMatrix {
  Matrix rho;
  Matrix rho_flip;
};

RhoMatrix rho_matrix(const ChainSpec& spec, const RepTable& table);

// r = rho - flip(rho); antisymmetric under the flip.
Matrix classical_r(const ChainSpec& spec, const RepTable& table);

// R_F = (f_p)_21 ... (f_0)_21 f_0^{-1} ... f_p^{-1}, assembled factor by
// factor in exactly that order.
Matrix twisted_R(const ChainSpec& spec, const RepTable& table);

// Closed form of R_F from rho alone: the exact product
//   (I + xi T + xi^2/2 T^2)(I - xi rho + xi^2/2 rho^2),  T = flip(rho).
// The two parenthesized quadratics are the chain element's flip and
// inverse whenever the per-factor exponential identity holds.
Matrix lemma_R(const ChainSpec& spec, const RepTable& table);

// P = sum e_ij (x) e_ji (permutation), K = sum e_ij (x) e_ij (its
// first-leg transpose).
std::pair<Matrix, Matrix> p_and_k(size_t dim);

// Spectral R-matrix data for series B: R(u) = u R_F + P - u/(u+kappa)
// F_21 K F^{-1} with kappa = N - 1/2.
struct SpectralRMatrix {
  size_t dim = 0;
  Rational kappa_shift;
  Matrix F;
  Matrix F21;
  Matrix Finv;
  Matrix RF;
  Matrix P;
  Matrix K;

  Matrix at(const Rational& u) const;  // throws on the pole u = -kappa
};

SpectralRMatrix make_spectral(const ChainSpec& spec, const RepTable& table);

// The same rational R(u) assembled from rho only, with the chain element
// factors replaced by their quadratic closed forms.
Matrix yangian_R_truncated(const RhoMatrix& rho, const Rational& xi,
                           const Rational& kappa, const Rational& u);

}  // namespace ytwist

#endif  // YTWIST_RMATRIX_HPP
