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

#include "ytwist/matrix.hpp"

#include <numeric>
#include <string>

namespace ytwist {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = GaussRational::one();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) {
      if (r == c) {
        if (at(r, c) != GaussRational::one()) return false;
      } else if (!at(r, c).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  }
  return m;
}

Matrix Matrix::conjugate() const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i].conj();
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(op) + ": shape mismatch " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

}  // namespace

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "add");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "sub");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::InvalidArgument,
                "matmul: inner dimensions differ (" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + ")");
  }
  Matrix c(a.rows(), b.cols());
  // i-k-j loop with zero skips: the tensor-cube products in the checks are
  // extremely sparse and this keeps them fast without sparse storage.
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      const GaussRational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        const GaussRational& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.at(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Matrix operator*(const GaussRational& s, const Matrix& m) {
  Matrix r(m.rows(), m.cols());
  if (s.is_zero()) return r;
  for (size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = s * m.a_[i];
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error(ErrorKind::InvalidArgument,
                "commutator: matrices must be square of equal dimension");
  }
  return a * b - b * a;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t ar = 0; ar < a.rows(); ++ar) {
    for (size_t ac = 0; ac < a.cols(); ++ac) {
      const GaussRational& x = a.at(ar, ac);
      if (x.is_zero()) continue;
      for (size_t br = 0; br < b.rows(); ++br) {
        for (size_t bc = 0; bc < b.cols(); ++bc) {
          const GaussRational& y = b.at(br, bc);
          if (y.is_zero()) continue;
          c.at(ar * b.rows() + br, ac * b.cols() + bc) = x * y;
        }
      }
    }
  }
  return c;
}

size_t TensorLeg::total() const {
  size_t t = 1;
  for (size_t d : dims) t *= d;
  return t;
}

namespace {

std::vector<size_t> decode_index(size_t idx, const std::vector<size_t>& dims) {
  std::vector<size_t> parts(dims.size());
  for (size_t i = dims.size(); i-- > 0;) {
    parts[i] = idx % dims[i];
    idx /= dims[i];
  }
  return parts;
}

size_t encode_index(const std::vector<size_t>& parts,
                    const std::vector<size_t>& dims) {
  size_t idx = 0;
  for (size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + parts[i];
  return idx;
}

}  // namespace

Matrix embed_leg(const Matrix& x, const TensorLeg& legs,
                 const std::vector<size_t>& placement) {
  const size_t nlegs = legs.dims.size();
  if (placement.empty() || placement.size() > nlegs) {
    throw Error(ErrorKind::InvalidArgument, "embed_leg: bad placement size");
  }
  std::vector<bool> used(nlegs, false);
  std::vector<size_t> xdims;
  for (size_t p : placement) {
    if (p < 1 || p > nlegs || used[p - 1]) {
      throw Error(ErrorKind::InvalidArgument,
                  "embed_leg: placement leg " + std::to_string(p) +
                      " out of range or repeated");
    }
    used[p - 1] = true;
    xdims.push_back(legs.dims[p - 1]);
  }
  size_t xtotal = 1;
  for (size_t d : xdims) xtotal *= d;
  if (x.rows() != xtotal || x.cols() != xtotal) {
    throw Error(ErrorKind::InvalidArgument,
                "embed_leg: matrix dimension " + std::to_string(x.rows()) +
                    " does not match placed legs product " +
                    std::to_string(xtotal));
  }

  std::vector<size_t> idle;  // legs carrying the identity
  for (size_t i = 0; i < nlegs; ++i) {
    if (!used[i]) idle.push_back(i);
  }
  size_t idle_total = 1;
  for (size_t i : idle) idle_total *= legs.dims[i];

  const size_t n = legs.total();
  Matrix out(n, n);
  std::vector<size_t> row_parts(nlegs), col_parts(nlegs);
  for (size_t xr = 0; xr < x.rows(); ++xr) {
    std::vector<size_t> xr_parts = decode_index(xr, xdims);
    for (size_t xc = 0; xc < x.cols(); ++xc) {
      const GaussRational& v = x.at(xr, xc);
      if (v.is_zero()) continue;
      std::vector<size_t> xc_parts = decode_index(xc, xdims);
      for (size_t t = 0; t < placement.size(); ++t) {
        row_parts[placement[t] - 1] = xr_parts[t];
        col_parts[placement[t] - 1] = xc_parts[t];
      }
      for (size_t d = 0; d < idle_total; ++d) {
        size_t rem = d;
        for (size_t i = idle.size(); i-- > 0;) {
          size_t leg = idle[i];
          row_parts[leg] = rem % legs.dims[leg];
          col_parts[leg] = row_parts[leg];
          rem /= legs.dims[leg];
        }
        out.at(encode_index(row_parts, legs.dims),
               encode_index(col_parts, legs.dims)) = v;
      }
    }
  }
  return out;
}

Matrix flip_tensor_square(const Matrix& x) {
  if (!x.is_square()) {
    throw Error(ErrorKind::InvalidArgument, "flip: matrix must be square");
  }
  size_t m = 1;
  while (m * m < x.rows()) ++m;
  if (m * m != x.rows()) {
    throw Error(ErrorKind::InvalidArgument,
                "flip: dimension is not a perfect square");
  }
  return embed_leg(x, TensorLeg{{m, m}}, {2, 1});
}

Matrix permutation_matrix(size_t m) {
  Matrix p(m * m, m * m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      p.at(i * m + j, j * m + i) = GaussRational::one();
    }
  }
  return p;
}

std::optional<size_t> nilpotency_index(const Matrix& x) {
  if (!x.is_square()) {
    throw Error(ErrorKind::InvalidArgument,
                "nilpotency_index: matrix must be square");
  }
  if (x.is_zero()) return 1;
  Matrix p = x;
  for (size_t k = 1; k <= x.rows(); ++k) {
    if (p.is_zero()) return k;
    if (k == x.rows()) break;
    p = p * x;
  }
  if (p.is_zero()) return x.rows();
  return std::nullopt;
}

Matrix unipotent_exp(const Matrix& n) {
  auto kappa = nilpotency_index(n);
  if (!kappa) {
    throw Error(ErrorKind::Domain, "unipotent_exp: matrix is not nilpotent");
  }
  Matrix sum = Matrix::identity(n.rows());
  Matrix term = Matrix::identity(n.rows());
  for (size_t k = 1; k < *kappa; ++k) {
    term = term * n;
    GaussRational inv_k(Rational(1, static_cast<unsigned long>(k)));
    term = inv_k * term;
    sum += term;
  }
  return sum;
}

Matrix unipotent_log(const Matrix& u) {
  Matrix m = u - Matrix::identity(u.rows());
  auto kappa = nilpotency_index(m);
  if (!kappa) {
    throw Error(ErrorKind::Domain,
                "unipotent_log: matrix minus identity is not nilpotent");
  }
  Matrix sum(u.rows(), u.rows());
  Matrix power = Matrix::identity(u.rows());
  for (size_t k = 1; k < *kappa; ++k) {
    power = power * m;
    Rational coeff(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k));
    coeff.canonicalize();
    sum += GaussRational(coeff) * power;
  }
  return sum;
}

Matrix unipotent_pow(const Matrix& u, const Rational& s) {
  Matrix m = u - Matrix::identity(u.rows());
  auto kappa = nilpotency_index(m);
  if (!kappa) {
    throw Error(ErrorKind::Domain,
                "unipotent_pow: matrix minus identity is not nilpotent");
  }
  Matrix sum = Matrix::identity(u.rows());
  Matrix power = Matrix::identity(u.rows());
  Rational binom(1);
  for (size_t k = 1; k < *kappa; ++k) {
    power = power * m;
    binom *= (s - Rational(static_cast<long>(k) - 1)) /
             Rational(static_cast<unsigned long>(k));
    sum += GaussRational(binom) * power;
  }
  return sum;
}

std::optional<EntryDiff> first_difference(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "first_difference");
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) {
      if (a.at(r, c) != b.at(r, c)) {
        return EntryDiff{r, c, a.at(r, c), b.at(r, c)};
      }
    }
  }
  return std::nullopt;
}

std::vector<Matrix> polynomial_matrix_coefficients(
    const std::function<Matrix(const Rational&)>& eval, size_t degree) {
  const size_t n = degree + 1;
  std::vector<Rational> pts(n);
  std::vector<Matrix> dd(n);
  for (size_t i = 0; i < n; ++i) {
    pts[i] = Rational(static_cast<long>(i));
    dd[i] = eval(pts[i]);
  }
  const size_t rows = dd[0].rows();
  const size_t cols = dd[0].cols();
  // Newton divided differences.
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      Matrix diff = dd[i] - dd[i - 1];
      GaussRational inv(Rational(1) / (pts[i] - pts[i - level]));
      dd[i] = inv * diff;
      if (i == level) break;
    }
  }
  // Horner expansion of the Newton form into monomial coefficients.
  std::vector<Matrix> poly;
  poly.push_back(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    std::vector<Matrix> next(poly.size() + 1, Matrix(rows, cols));
    GaussRational shift(pts[i]);
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= shift * poly[k];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  poly.resize(n, Matrix(rows, cols));
  return poly;
}

}  // namespace ytwist
