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

#ifndef YTWIST_SCALAR_HPP
#define YTWIST_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ytwist {

using Rational = mpq_class;

enum class ErrorKind {
  InvalidArgument,  // bad parameters, dimension mismatches
  Parse,            // malformed text input
  Domain            // division by zero, pole hit, nilpotency violation
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Exact Gaussian-rational scalar re + im*i. mpq_class keeps every
// component reduced with a positive denominator, so operator== is
// structural equality of canonical forms.
class GaussRational {
 public:
  GaussRational() : re_(0), im_(0) {}
  GaussRational(Rational re) : re_(std::move(re)) {}
  GaussRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}
  GaussRational(long re) : re_(re) {}
  GaussRational(long re_num, long re_den, long im_num, long im_den)
      : re_(re_num, re_den), im_(im_num, im_den) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational zero() { return GaussRational(); }
  static GaussRational one() { return GaussRational(1); }
  static GaussRational imaginary_unit() {
    return GaussRational(Rational(0), Rational(1));
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return GaussRational(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRational operator-() const { return GaussRational(-re_, -im_); }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) {
    a += b;
    return a;
  }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) {
    a -= b;
    return a;
  }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) {
    a *= b;
    return a;
  }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) {
    a /= b;
    return a;
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) {
    return !(a == b);
  }

 private:
  Rational re_;
  Rational im_;
};

// Text form "a/b+c/di" with optional parts, e.g. "3/2", "-1/2i", "1+i".
// parse_scalar(print_scalar(x)) == x for every x; malformed input raises
// Error{Parse} naming the offending position.
GaussRational parse_scalar(std::string_view text);
std::string print_scalar(const GaussRational& x);

std::string print_rational(const Rational& x);
// Parses the scalar grammar but rejects a nonzero imaginary part.
Rational parse_rational(std::string_view text);

}  // namespace ytwist

#endif  // YTWIST_SCALAR_HPP
