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

#ifndef YTWIST_MATRIX_HPP
#define YTWIST_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ytwist/scalar.hpp"

namespace ytwist {

// Dense row-major matrix over GaussRational. All arithmetic is exact;
// there is no floating-point path anywhere.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussRational& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const GaussRational& at(size_t r, size_t c) const {
    return a_[r * cols_ + c];
  }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix conjugate() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a += b;
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a -= b;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const GaussRational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

 private:
  size_t rows_;
  size_t cols_;
  std::vector<GaussRational> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

// Ordered factor dimensions of a tensor-product space. Advisory metadata:
// numeric dimension checks guard every operation regardless.
struct TensorLeg {
  std::vector<size_t> dims;
  size_t total() const;
};

// Places x (acting on the legs named by `placement`, 1-based, in x's own
// factor order) inside the space described by `legs`, identity elsewhere.
// embed_leg(X, {m,m}, {2,1}) is the tensor flip of X.
Matrix embed_leg(const Matrix& x, const TensorLeg& legs,
                 const std::vector<size_t>& placement);

// Flip of a square matrix on an m x m tensor square.
Matrix flip_tensor_square(const Matrix& x);

// Permutation matrix P on C^m (x) C^m with P (v (x) w) = w (x) v.
Matrix permutation_matrix(size_t m);

// Smallest k with x^k = 0, or nullopt when x^dim != 0.
std::optional<size_t> nilpotency_index(const Matrix& x);

// Finite exact series; every function verifies nilpotency first and
// raises Error{Domain} instead of silently truncating.
Matrix unipotent_exp(const Matrix& n);
Matrix unipotent_log(const Matrix& u);
Matrix unipotent_pow(const Matrix& u, const Rational& s);

struct EntryDiff {
  size_t row;
  size_t col;
  GaussRational lhs;
  GaussRational rhs;
};

// Lexicographically first (row, col) where a and b differ.
std::optional<EntryDiff> first_difference(const Matrix& a, const Matrix& b);

// Exact coefficients of a matrix-valued polynomial of degree <= degree,
// recovered by Newton interpolation at the points 0, 1, ..., degree.
std::vector<Matrix> polynomial_matrix_coefficients(
    const std::function<Matrix(const Rational&)>& eval, size_t degree);

}  // namespace ytwist

#endif  // YTWIST_MATRIX_HPP
