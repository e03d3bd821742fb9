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

#ifndef YTWIST_CHAIN_HPP
#define YTWIST_CHAIN_HPP

#include <utility>
#include <vector>

#include "ytwist/rep_table.hpp"

namespace ytwist {

// One level of a twist chain. Level k lives on the e-basis window
// [2k+1, N] with initial root e_{2k+1} + e_{2k+2}; pi_prime holds the
// constituents whose coefficient on e_{2k+1} is +1, pi_dprime their
// partners under λ' -> λ0 - λ'.
struct ChainLevel {
  int k = 0;
  int window_lo = 1;
  int window_hi = 0;
  Root lambda0;
  std::vector<Root> pi_prime;
  std::vector<Root> pi_dprime;
  Rational eta;
};

struct ChainSpec {
  Series series = Series::B;
  int N = 0;
  int p = 0;
  Rational xi;
  std::vector<ChainLevel> levels;

  Rational xi_level(int k) const { return xi * levels[k].eta; }
};

// All unordered pairs (λ', λ'' = λ0 - λ') of roots in Lambda with
// λ' + λ0 and λ'' + λ0 outside Lambda, split deterministically by the
// coefficient-one rule on λ0's first basis vector.
std::pair<std::vector<Root>, std::vector<Root>> constituent_roots(
    const Root& lambda0, const std::vector<Root>& lambda);

// Validated chain data: window towers, orthogonality of each initial
// root to all deeper windows, and the conjugate-diagram condition checked
// as weight-multiset agreement of pi_prime and -pi_dprime over the deeper
// Cartans. Requires p + 1 <= floor(N / 2) and etas.size() == p + 1.
ChainSpec build_chain_spec(Series series, int N, int p, const Rational& xi,
                           const std::vector<Rational>& etas);

struct ExtensionTerm {
  Root lambda_prime;
  Matrix left;             // d(L_{λ'})
  Matrix right_unscaled;   // partner normalized so [left, right] = mu * e
  Matrix right_gen;        // xi_k * right_unscaled (the rescaled leg)
  Rational beta;           // dressing exponent, 1/2 throughout
  GaussRational pair_constant;  // [d(L_{λ'}), d(L_{λ0-λ'})] = c * d(L_{λ0})
};

// Twist factor of one level in d (x) d. The carrier normalization uses
// H = h / mu and the sigma generator mu * xi_k * e, where mu is the
// eigenvalue in [h, e] = mu e; with that choice the Jordanian equals
// exp(xi_k h (x) e) and the extension exponent reproduces the printed
// coefficient pattern (1 on the short pair, 2 on the long pairs).
struct TwistFactorMatrices {
  Matrix jordanian;
  Matrix extension;
  Matrix sigma;    // log(I + epsilon), single leg
  Matrix jord_h;   // h / mu
  Matrix epsilon;  // mu * xi_k * gen(λ0)
  Matrix e_gen;    // gen(λ0)
  Matrix h_raw;    // cartan H_{λ0}
  Rational mu;
  Rational xi_k;
  std::vector<ExtensionTerm> exponent_terms;

  // eta_k * (h (x) e + sum_{λ'} a (x) b): the level's first-order matrix.
  Matrix rho_level(const Rational& eta) const;
};

TwistFactorMatrices factor_matrices(const ChainSpec& spec, int k,
                                    const RepTable& table);

enum class FactorOrder {
  ExtensionFirst,  // F = Phi_E Phi_J, the twist order
  JordanianFirst   // deliberately corrupted order for negative controls
};

// F = f_p f_{p-1} ... f_0 with f_k = extension_k * jordanian_k.
Matrix chain_element(const ChainSpec& spec, const RepTable& table,
                     FactorOrder order = FactorOrder::ExtensionFirst);
Matrix chain_element_inverse(const ChainSpec& spec, const RepTable& table,
                             FactorOrder order = FactorOrder::ExtensionFirst);

enum class CoproductSide { Left, Right };

// (Δ (x) id)(f_k) resp. (id (x) Δ)(f_k) in d (x) d (x) d, with Δ acting
// primitively on every generator; dressed legs map through
// (I + Δ(epsilon))^(-beta) and sigma through log(I + Δ(epsilon)).
Matrix coproduct_image(const ChainSpec& spec, int k, CoproductSide side,
                       const RepTable& table,
                       FactorOrder order = FactorOrder::ExtensionFirst);

// Left and right sides of the twist identity
//   F_12 (Δ (x) id)(F) = F_23 (id (x) Δ)(F)
// composed factor-wise in chain order.
std::pair<Matrix, Matrix> twist_equation_sides(
    const ChainSpec& spec, const RepTable& table,
    FactorOrder order = FactorOrder::ExtensionFirst);

}  // namespace ytwist

#endif  // YTWIST_CHAIN_HPP
