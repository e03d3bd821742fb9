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

#include "ytwist/rep_table.hpp"

#include <string>

namespace ytwist {

Matrix okubo(size_t i, size_t j, size_t dim) {
  if (i < 1 || j <= i || j > dim) {
    throw Error(ErrorKind::InvalidArgument,
                "okubo: need 1 <= i < j <= dim, got i=" + std::to_string(i) +
                    " j=" + std::to_string(j) + " dim=" + std::to_string(dim));
  }
  Matrix m(dim, dim);
  m.at(i - 1, j - 1) = GaussRational::one();
  m.at(j - 1, i - 1) = -GaussRational::one();
  return m;
}

namespace {

const GaussRational kI = GaussRational::imaginary_unit();
const GaussRational kHalf{Rational(1, 2)};

// Smallest scalar c with x = c * y, or throws `what` when no such c exists.
GaussRational solve_multiple(const Matrix& x, const Matrix& y,
                             const std::string& what) {
  GaussRational c;
  bool found = false;
  for (size_t r = 0; r < y.rows() && !found; ++r) {
    for (size_t col = 0; col < y.cols() && !found; ++col) {
      if (!y.at(r, col).is_zero()) {
        c = x.at(r, col) / y.at(r, col);
        found = true;
      }
    }
  }
  if (!found) {
    throw Error(ErrorKind::Domain, what + ": reference matrix is zero");
  }
  if (x != c * y) {
    throw Error(ErrorKind::Domain, what + ": not an exact scalar multiple");
  }
  return c;
}

}  // namespace

RepTable RepTable::build(Series s, int N) {
  if (N < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "representation table rank must be at least 2, got " +
                    std::to_string(N));
  }
  RepTable t;
  t.series_ = s;
  t.N_ = N;
  t.dim_ = s == Series::B ? 2 * N + 1 : 2 * N;
  t.roots_ = build_root_system(s, N);

  for (int i = 1; i <= N; ++i) {
    t.h_.push_back(-kI * okubo(2 * i - 1, 2 * i, t.dim_));
  }

  if (s == Series::B) {
    for (int k = 1; k <= N; ++k) {
      Matrix ek = okubo(2 * k, 2 * N + 1, t.dim_) -
                  kI * okubo(2 * k - 1, 2 * N + 1, t.dim_);
      t.gen_.emplace(Root::basis(N, k), std::move(ek));
    }
  }
  for (int i = 1; i < N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      Matrix mij = okubo(2 * i, 2 * j, t.dim_);
      Matrix mij1 = okubo(2 * i, 2 * j - 1, t.dim_);
      Matrix mi1j = okubo(2 * i - 1, 2 * j, t.dim_);
      Matrix mi1j1 = okubo(2 * i - 1, 2 * j - 1, t.dim_);
      Matrix plus = kHalf * (-mij + kI * mij1 + kI * mi1j + mi1j1);
      Matrix minus = kHalf * (-mij - kI * mij1 + kI * mi1j - mi1j1);
      t.gen_.emplace(Root::basis(N, i) + Root::basis(N, j), std::move(plus));
      t.gen_.emplace(Root::basis(N, i) - Root::basis(N, j), std::move(minus));
    }
  }
  // Negative-root partners: complex conjugation maps weight λ to -λ here.
  for (const Root& r : t.roots_) {
    if (t.gen_.count(r)) continue;
    auto it = t.gen_.find(-r);
    if (it == t.gen_.end()) {
      throw Error(ErrorKind::Domain, "missing generator for " + r.label());
    }
    t.gen_.emplace(r, it->second.conjugate());
  }

  t.validate_closure();
  return t;
}

const Matrix& RepTable::generator(const Root& r) const {
  auto it = gen_.find(r);
  if (it == gen_.end()) {
    throw Error(ErrorKind::InvalidArgument,
                "no generator for root " + r.label());
  }
  return it->second;
}

const Matrix& RepTable::cartan_h(int i) const {
  if (i < 1 || i > N_) {
    throw Error(ErrorKind::InvalidArgument,
                "cartan index out of range: " + std::to_string(i));
  }
  return h_[i - 1];
}

Matrix RepTable::cartan(int i, int j) const {
  if (i >= j) {
    throw Error(ErrorKind::InvalidArgument, "cartan(i, j) needs i < j");
  }
  return cartan_h(i) + cartan_h(j);
}

GaussRational RepTable::structure_constant(const Root& a, const Root& b) const {
  Root sum = a + b;
  if (!has_generator(sum)) {
    throw Error(ErrorKind::InvalidArgument,
                "structure_constant: " + a.label() + " + " + b.label() +
                    " is not a root");
  }
  return solve_multiple(commutator(generator(a), generator(b)), generator(sum),
                        "structure constant [" + a.label() + ", " + b.label() +
                            "]");
}

void RepTable::validate_closure() const {
  // Every generator lies in the Okubo span: X^T = -X over GaussRational.
  for (const auto& [r, g] : gen_) {
    if (g.transpose() != -g) {
      throw Error(ErrorKind::Domain,
                  "generator " + r.label() + " is not antisymmetric");
    }
  }
  // Cartan action: [h_i, L_λ] = λ_i L_λ.
  for (int i = 1; i <= N_; ++i) {
    for (const auto& [r, g] : gen_) {
      Matrix comm = commutator(cartan_h(i), g);
      Matrix expect = GaussRational(Rational(r.coeff(i))) * g;
      if (comm != expect) {
        throw Error(ErrorKind::Domain, "closure failure: [h" +
                                           std::to_string(i) + ", " +
                                           r.label() + "]");
      }
    }
  }
  // Root-root commutators close on the table.
  for (const auto& [a, ga] : gen_) {
    for (const auto& [b, gb] : gen_) {
      Matrix comm = commutator(ga, gb);
      Root sum = a + b;
      if (sum.is_zero()) {
        // Must be a combination of the h_i, read off from the
        // (2i-1, 2i) entries where h_i equals -i.
        Matrix rebuilt(dim_, dim_);
        for (int i = 1; i <= N_; ++i) {
          GaussRational d = comm.at(2 * i - 2, 2 * i - 1) * kI;
          rebuilt += d * h_[i - 1];
        }
        if (comm != rebuilt) {
          throw Error(ErrorKind::Domain,
                      "closure failure: [" + a.label() + ", " + b.label() +
                          "] is not in the Cartan span");
        }
      } else if (contains_root(roots_, sum)) {
        GaussRational c =
            solve_multiple(comm, generator(sum),
                           "closure [" + a.label() + ", " + b.label() + "]");
        if (c.is_zero()) {
          throw Error(ErrorKind::Domain,
                      "closure failure: [" + a.label() + ", " + b.label() +
                          "] vanishes but " + sum.label() + " is a root");
        }
      } else if (!comm.is_zero()) {
        throw Error(ErrorKind::Domain,
                    "closure failure: [" + a.label() + ", " + b.label() +
                        "] nonzero for non-root sum " + sum.label());
      }
    }
  }
}

void CarrierQuadruple::verify() const {
  struct Relation {
    const char* name;
    Matrix lhs;
    Matrix rhs;
  };
  const Relation relations[] = {
      {"[H,E] = E", commutator(H, E), E},
      {"[A,B] = E", commutator(A, B), E},
      {"[H,A] = alpha A", commutator(H, A), GaussRational(alpha) * A},
      {"[H,B] = beta B", commutator(H, B), GaussRational(beta) * B},
      {"[E,A] = 0", commutator(E, A), Matrix(E.rows(), E.cols())},
      {"[E,B] = 0", commutator(E, B), Matrix(E.rows(), E.cols())},
  };
  for (const auto& rel : relations) {
    if (rel.lhs != rel.rhs) {
      throw Error(ErrorKind::Domain,
                  std::string("carrier relation violated: ") + rel.name);
    }
  }
  if (alpha + beta != 1) {
    throw Error(ErrorKind::Domain, "carrier relation violated: alpha+beta = 1");
  }
}

CarrierQuadruple carrier_quadruple(const RepTable& table, const Root& lambda0,
                                   const Root& lambda_prime) {
  int i = 0, j = 0;
  for (size_t k = 1; k <= lambda0.rank(); ++k) {
    if (lambda0.coeff(k) == 1) {
      if (i == 0) {
        i = static_cast<int>(k);
      } else {
        j = static_cast<int>(k);
      }
    } else if (lambda0.coeff(k) != 0) {
      i = j = -1;
      break;
    }
  }
  if (i <= 0 || j <= 0) {
    throw Error(ErrorKind::InvalidArgument,
                "initial root must have the form e_i + e_j, got " +
                    lambda0.label());
  }
  Root lambda_second = lambda0 - lambda_prime;
  if (!table.has_generator(lambda_prime) ||
      !table.has_generator(lambda_second)) {
    throw Error(ErrorKind::InvalidArgument,
                "constituent pair " + lambda_prime.label() + " + " +
                    lambda_second.label() + " is not a pair of roots");
  }

  CarrierQuadruple q;
  q.E = table.generator(lambda0);
  Matrix h_raw = table.cartan(i, j);
  GaussRational mu = solve_multiple(commutator(h_raw, q.E), q.E,
                                    "[H_{" + lambda0.label() + "}, L]");
  if (!mu.is_real() || sgn(mu.re()) == 0) {
    throw Error(ErrorKind::Domain, "unexpected Cartan eigenvalue for " +
                                       lambda0.label() + ": " +
                                       print_scalar(mu));
  }
  q.mu = mu.re();
  q.H = GaussRational(Rational(1) / q.mu) * h_raw;
  q.A = table.generator(lambda_prime);
  q.pair_constant =
      solve_multiple(commutator(q.A, table.generator(lambda_second)), q.E,
                     "[" + lambda_prime.label() + ", " +
                         lambda_second.label() + "]");
  if (q.pair_constant.is_zero()) {
    throw Error(ErrorKind::Domain,
                "constituent pair " + lambda_prime.label() + ", " +
                    lambda_second.label() + " has vanishing bracket");
  }
  q.B = (GaussRational::one() / q.pair_constant) *
        table.generator(lambda_second);
  q.alpha = Rational(lambda_prime.dot(lambda0)) / q.mu;
  q.beta = Rational(lambda_second.dot(lambda0)) / q.mu;
  q.alpha.canonicalize();
  q.beta.canonicalize();
  q.verify();
  return q;
}

}  // namespace ytwist
