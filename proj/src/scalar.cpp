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

#include "ytwist/scalar.hpp"

#include <cctype>

namespace ytwist {

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) {
    throw Error(ErrorKind::Domain, "scalar division by zero");
  }
  Rational n = o.norm();
  Rational r = (re_ * o.re_ + im_ * o.im_) / n;
  Rational i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, size_t pos,
                             const std::string& why) {
  throw Error(ErrorKind::Parse, "cannot parse scalar \"" + std::string(text) +
                                    "\" at position " + std::to_string(pos) +
                                    ": " + why);
}

struct Term {
  Rational value;
  bool imaginary = false;
};

// term := sign? ( 'i' | digits ('/' digits)? 'i'? )
Term parse_term(std::string_view text, size_t& pos) {
  Term t;
  int sign = 1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') sign = -1;
    ++pos;
  }
  if (pos >= text.size()) parse_fail(text, pos, "expected a term");
  if (text[pos] == 'i') {
    ++pos;
    t.value = sign;
    t.imaginary = true;
    return t;
  }
  if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
    parse_fail(text, pos, "expected digits or 'i'");
  }
  size_t start = pos;
  while (pos < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  mpz_class num(std::string(text.substr(start, pos - start)), 10);
  mpz_class den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      parse_fail(text, pos, "expected denominator digits");
    }
    size_t dstart = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    den = mpz_class(std::string(text.substr(dstart, pos - dstart)), 10);
    if (sgn(den) == 0) parse_fail(text, dstart, "zero denominator");
  }
  t.value = Rational(num, den);
  t.value.canonicalize();
  if (sign < 0) t.value = -t.value;
  if (pos < text.size() && text[pos] == 'i') {
    ++pos;
    t.imaginary = true;
  }
  return t;
}

}  // namespace

GaussRational parse_scalar(std::string_view text) {
  size_t pos = 0;
  if (text.empty()) parse_fail(text, 0, "empty input");
  Term first = parse_term(text, pos);
  Rational re(0), im(0);
  (first.imaginary ? im : re) = first.value;
  if (pos < text.size()) {
    if (text[pos] != '+' && text[pos] != '-') {
      parse_fail(text, pos, "expected '+' or '-'");
    }
    Term second = parse_term(text, pos);
    if (!second.imaginary) {
      parse_fail(text, pos, "second term must be imaginary");
    }
    if (first.imaginary) {
      parse_fail(text, pos, "duplicate imaginary term");
    }
    im = second.value;
  }
  if (pos != text.size()) parse_fail(text, pos, "trailing characters");
  return GaussRational(std::move(re), std::move(im));
}

std::string print_rational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

std::string print_imag_magnitude(const Rational& x) {
  if (x == 1) return "i";
  return print_rational(x) + "i";
}

}  // namespace

std::string print_scalar(const GaussRational& x) {
  if (x.is_zero()) return "0";
  if (x.is_real()) return print_rational(x.re());
  if (sgn(x.re()) == 0) {
    if (sgn(x.im()) < 0) return "-" + print_imag_magnitude(-x.im());
    return print_imag_magnitude(x.im());
  }
  std::string out = print_rational(x.re());
  if (sgn(x.im()) < 0) {
    out += "-" + print_imag_magnitude(-x.im());
  } else {
    out += "+" + print_imag_magnitude(x.im());
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  GaussRational x = parse_scalar(text);
  if (!x.is_real()) {
    throw Error(ErrorKind::Parse, "expected a rational value, got \"" +
                                      std::string(text) +
                                      "\" with an imaginary part");
  }
  return x.re();
}

}  // namespace ytwist
