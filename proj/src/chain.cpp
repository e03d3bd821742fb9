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

#include "ytwist/chain.hpp"

#include <algorithm>
#include <string>

namespace ytwist {

std::pair<std::vector<Root>, std::vector<Root>> constituent_roots(
    const Root& lambda0, const std::vector<Root>& lambda) {
  if (!contains_root(lambda, lambda0)) {
    throw Error(ErrorKind::InvalidArgument,
                "initial root " + lambda0.label() +
                    " is not in the given root set");
  }
  size_t first = 0;
  for (size_t i = 1; i <= lambda0.rank(); ++i) {
    if (lambda0.coeff(i) != 0) {
      first = i;
      break;
    }
  }
  std::vector<Root> prime, dprime;
  for (const Root& lp : lambda) {
    Root ls = lambda0 - lp;
    if (!contains_root(lambda, ls)) continue;
    if (contains_root(lambda, lp + lambda0)) continue;
    if (contains_root(lambda, ls + lambda0)) continue;
    // Exactly one member of each pair carries coefficient +1 on the
    // window's first basis vector; keep that one on the left legs.
    if (lp.coeff(first) != 1) continue;
    if (ls.coeff(first) == 1) {
      throw Error(ErrorKind::Domain,
                  "cannot split constituent pair " + lp.label() + ", " +
                      ls.label() + " deterministically");
    }
    prime.push_back(lp);
    dprime.push_back(ls);
  }
  return {prime, dprime};
}

ChainSpec build_chain_spec(Series series, int N, int p, const Rational& xi,
                           const std::vector<Rational>& etas) {
  if (N < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "chain rank must be at least 2, got " + std::to_string(N));
  }
  if (p < 0 || p + 1 > N / 2) {
    throw Error(ErrorKind::InvalidArgument,
                "chain depth " + std::to_string(p) + " exceeds capacity: at " +
                    "most " + std::to_string(N / 2) + " levels for rank " +
                    std::to_string(N));
  }
  if (etas.size() != static_cast<size_t>(p + 1)) {
    throw Error(ErrorKind::InvalidArgument,
                "expected " + std::to_string(p + 1) + " eta values, got " +
                    std::to_string(etas.size()));
  }

  ChainSpec spec;
  spec.series = series;
  spec.N = N;
  spec.p = p;
  spec.xi = xi;

  for (int k = 0; k <= p; ++k) {
    ChainLevel level;
    level.k = k;
    level.window_lo = 2 * k + 1;
    level.window_hi = N;
    level.lambda0 = Root::basis(N, 2 * k + 1) + Root::basis(N, 2 * k + 2);
    level.eta = etas[k];
    std::vector<Root> window =
        window_roots(series, N, level.window_lo, level.window_hi);
    auto [prime, dprime] = constituent_roots(level.lambda0, window);
    level.pi_prime = std::move(prime);
    level.pi_dprime = std::move(dprime);

    // Condition 1: the initial root must be orthogonal to every root
    // supported on the deeper windows.
    if (k < p) {
      for (const Root& r : window_roots(series, N, 2 * k + 3, N)) {
        if (level.lambda0.dot(r) != 0) {
          throw Error(ErrorKind::Domain,
                      "level " + std::to_string(k) + ": initial root " +
                          level.lambda0.label() +
                          " is not orthogonal to deeper root " + r.label());
        }
      }
    }
    // Condition 2, checked operationally: λ' -> λ0 - λ' pairs the two
    // subsets, and their weight multisets over the deeper Cartans agree
    // after negating the partners.
    {
      std::vector<std::vector<long>> wp, wd;
      for (size_t t = 0; t < level.pi_prime.size(); ++t) {
        std::vector<long> a, b;
        for (int i = 2 * k + 3; i <= N; ++i) {
          a.push_back(level.pi_prime[t].coeff(i));
          b.push_back(-level.pi_dprime[t].coeff(i));
        }
        wp.push_back(std::move(a));
        wd.push_back(std::move(b));
      }
      std::sort(wp.begin(), wp.end());
      std::sort(wd.begin(), wd.end());
      if (wp != wd) {
        throw Error(ErrorKind::Domain,
                    "level " + std::to_string(k) +
                        ": constituent subsets are not conjugate over the " +
                        "deeper Cartan");
      }
    }
    spec.levels.push_back(std::move(level));
  }
  return spec;
}

Matrix TwistFactorMatrices::rho_level(const Rational& eta) const {
  Matrix sum = kron(h_raw, e_gen);
  for (const auto& term : exponent_terms) {
    sum += kron(term.left, term.right_unscaled);
  }
  return GaussRational(eta) * sum;
}

TwistFactorMatrices factor_matrices(const ChainSpec& spec, int k,
                                    const RepTable& table) {
  if (k < 0 || k > spec.p) {
    throw Error(ErrorKind::InvalidArgument,
                "level index " + std::to_string(k) + " out of range");
  }
  const ChainLevel& level = spec.levels[k];
  const size_t d = table.dim();

  TwistFactorMatrices f;
  f.xi_k = spec.xi_level(k);
  f.h_raw = table.cartan(level.window_lo, level.window_lo + 1);
  f.e_gen = table.generator(level.lambda0);

  // All carrier data is derived, not assumed: mu from [h, e] = mu e and
  // the pair constants from [a, g] = c e, each verified exactly.
  CarrierQuadruple probe;
  if (!level.pi_prime.empty()) {
    probe = carrier_quadruple(table, level.lambda0, level.pi_prime.front());
    f.mu = probe.mu;
  } else {
    // Pure Jordanian level (D windows of width two have no constituents).
    Matrix comm = commutator(f.h_raw, f.e_gen);
    GaussRational mu_scalar;
    for (size_t r = 0; r < d && mu_scalar.is_zero(); ++r) {
      for (size_t c = 0; c < d && mu_scalar.is_zero(); ++c) {
        if (!f.e_gen.at(r, c).is_zero()) {
          mu_scalar = comm.at(r, c) / f.e_gen.at(r, c);
        }
      }
    }
    if (comm != mu_scalar * f.e_gen || !mu_scalar.is_real()) {
      throw Error(ErrorKind::Domain,
                  "level " + std::to_string(k) +
                      ": [H, L] is not a rational multiple of L");
    }
    f.mu = mu_scalar.re();
  }

  GaussRational inv_mu{Rational(1) / f.mu};
  f.jord_h = inv_mu * f.h_raw;
  f.epsilon = GaussRational(f.mu * f.xi_k) * f.e_gen;
  f.sigma = unipotent_log(Matrix::identity(d) + f.epsilon);
  f.jordanian = unipotent_exp(kron(f.jord_h, f.sigma));

  Matrix dress = unipotent_pow(Matrix::identity(d) + f.epsilon,
                               Rational(-1, 2));
  f.extension = Matrix::identity(d * d);
  for (const Root& lp : level.pi_prime) {
    CarrierQuadruple q = carrier_quadruple(table, level.lambda0, lp);
    ExtensionTerm term;
    term.lambda_prime = lp;
    term.left = q.A;
    term.right_unscaled = GaussRational(q.mu) * q.B;
    term.right_gen = GaussRational(f.xi_k) * term.right_unscaled;
    term.beta = Rational(1, 2);
    term.pair_constant = q.pair_constant;
    Matrix exponent = kron(term.left, term.right_gen * dress);
    f.extension = f.extension * unipotent_exp(exponent);
    f.exponent_terms.push_back(std::move(term));
  }
  return f;
}

namespace {

Matrix level_factor(const TwistFactorMatrices& f, FactorOrder order) {
  return order == FactorOrder::ExtensionFirst ? f.extension * f.jordanian
                                              : f.jordanian * f.extension;
}

Matrix level_factor_inverse(const TwistFactorMatrices& f, FactorOrder order,
                            const RepTable& table) {
  const size_t d = table.dim();
  Matrix jord_inv = unipotent_exp(-kron(f.jord_h, f.sigma));
  Matrix dress = unipotent_pow(Matrix::identity(d) + f.epsilon,
                               Rational(-1, 2));
  Matrix ext_inv = Matrix::identity(d * d);
  for (auto it = f.exponent_terms.rbegin(); it != f.exponent_terms.rend();
       ++it) {
    ext_inv = ext_inv * unipotent_exp(-kron(it->left, it->right_gen * dress));
  }
  return order == FactorOrder::ExtensionFirst ? jord_inv * ext_inv
                                              : ext_inv * jord_inv;
}

Matrix primitive_coproduct(const Matrix& x) {
  Matrix id = Matrix::identity(x.rows());
  return kron(x, id) + kron(id, x);
}

}  // namespace

Matrix chain_element(const ChainSpec& spec, const RepTable& table,
                     FactorOrder order) {
  const size_t d = table.dim();
  Matrix f = Matrix::identity(d * d);
  for (int k = spec.p; k >= 0; --k) {
    f = f * level_factor(factor_matrices(spec, k, table), order);
  }
  return f;
}

Matrix chain_element_inverse(const ChainSpec& spec, const RepTable& table,
                             FactorOrder order) {
  const size_t d = table.dim();
  Matrix f = Matrix::identity(d * d);
  for (int k = 0; k <= spec.p; ++k) {
    f = f * level_factor_inverse(factor_matrices(spec, k, table), order, table);
  }
  return f;
}

Matrix coproduct_image(const ChainSpec& spec, int k, CoproductSide side,
                       const RepTable& table, FactorOrder order) {
  const size_t d = table.dim();
  TwistFactorMatrices f = factor_matrices(spec, k, table);

  Matrix jordanian3, extension3 = Matrix::identity(d * d * d);
  if (side == CoproductSide::Left) {
    jordanian3 = unipotent_exp(kron(primitive_coproduct(f.jord_h), f.sigma));
    Matrix dress = unipotent_pow(Matrix::identity(d) + f.epsilon,
                                 Rational(-1, 2));
    for (const auto& term : f.exponent_terms) {
      Matrix exponent =
          kron(primitive_coproduct(term.left), term.right_gen * dress);
      extension3 = extension3 * unipotent_exp(exponent);
    }
  } else {
    Matrix delta_eps = primitive_coproduct(f.epsilon);
    Matrix sigma2 = unipotent_log(Matrix::identity(d * d) + delta_eps);
    jordanian3 = unipotent_exp(kron(f.jord_h, sigma2));
    Matrix dress2 = unipotent_pow(Matrix::identity(d * d) + delta_eps,
                                  Rational(-1, 2));
    for (const auto& term : f.exponent_terms) {
      Matrix exponent =
          kron(term.left, primitive_coproduct(term.right_gen) * dress2);
      extension3 = extension3 * unipotent_exp(exponent);
    }
  }
  return order == FactorOrder::ExtensionFirst ? extension3 * jordanian3
                                              : jordanian3 * extension3;
}

std::pair<Matrix, Matrix> twist_equation_sides(const ChainSpec& spec,
                                               const RepTable& table,
                                               FactorOrder order) {
  const size_t d = table.dim();
  TensorLeg legs{{d, d, d}};
  Matrix f = chain_element(spec, table, order);
  Matrix lhs = embed_leg(f, legs, {1, 2});
  Matrix rhs = embed_leg(f, legs, {2, 3});
  for (int k = spec.p; k >= 0; --k) {
    lhs = lhs * coproduct_image(spec, k, CoproductSide::Left, table, order);
    rhs = rhs * coproduct_image(spec, k, CoproductSide::Right, table, order);
  }
  return {lhs, rhs};
}

}  // namespace ytwist
