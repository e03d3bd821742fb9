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

#ifndef YTWIST_REP_TABLE_HPP
#define YTWIST_REP_TABLE_HPP

#include <map>
#include <vector>

#include "ytwist/matrix.hpp"
#include "ytwist/roots.hpp"

namespace ytwist {

// Antisymmetric unit M_ij = e_ij - e_ji (1-based, i < j).
Matrix okubo(size_t i, size_t j, size_t dim);

// Defining representation of so(2N+1) (series B) or so(2N) (series D)
// over the Okubo basis. Conventions, fixed once here and validated by the
// closure check at build time:
//   h_i        = -i M_{2i-1,2i}                       (Cartan)
//   L_{e_k}    = M_{2k,2N+1} - i M_{2k-1,2N+1}        (B only)
//   L_{e_i±e_j} = (1/2)(-M_{2i,2j} ± i M_{2i,2j-1}
//                        + i M_{2i-1,2j} ± M_{2i-1,2j-1})   for i < j
// Negative-root matrices are the complex conjugates of the positive ones.
// In this normalization h_i has eigenvalues {0, ±1} and
// [H_{e_i+e_j}, L_{e_i+e_j}] = 2 L_{e_i+e_j}.
class RepTable {
 public:
  static RepTable build(Series s, int N);

  Series series() const { return series_; }
  int rank() const { return N_; }
  size_t dim() const { return dim_; }

  const std::vector<Root>& roots() const { return roots_; }
  bool has_generator(const Root& r) const { return gen_.count(r) != 0; }
  const Matrix& generator(const Root& r) const;

  // h_i, 1-based.
  const Matrix& cartan_h(int i) const;
  // H_{e_i+e_j} = h_i + h_j for i < j.
  Matrix cartan(int i, int j) const;

  // Scalar c with [gen(a), gen(b)] = c * gen(a+b); requires a+b a root.
  GaussRational structure_constant(const Root& a, const Root& b) const;

  // Exact commutator closure over the whole table; throws naming the
  // first offending pair. Runs automatically in build().
  void validate_closure() const;

 private:
  RepTable() = default;
  Series series_ = Series::B;
  int N_ = 0;
  size_t dim_ = 0;
  std::vector<Root> roots_;
  std::map<Root, Matrix> gen_;
  std::vector<Matrix> h_;
};

// Carrier quadruple for one constituent pair: exact matrices with
//   [H,E] = E, [A,B] = E, [H,A] = alpha A, [H,B] = beta B,
//   [E,A] = [E,B] = 0, alpha + beta = 1.
struct CarrierQuadruple {
  Matrix H;
  Matrix E;
  Matrix A;
  Matrix B;
  Rational alpha;
  Rational beta;
  // [cartan(λ0), gen(λ0)] = mu * gen(λ0); mu = 2 in this realization.
  Rational mu;
  // [gen(λ'), gen(λ0-λ')] = pair_constant * gen(λ0), before rescaling B.
  GaussRational pair_constant;

  // Verifies all six relations, throwing with the violated one.
  void verify() const;
};

CarrierQuadruple carrier_quadruple(const RepTable& table, const Root& lambda0,
                                   const Root& lambda_prime);

}  // namespace ytwist

#endif  // YTWIST_REP_TABLE_HPP
