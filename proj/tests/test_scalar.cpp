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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "ytwist/scalar.hpp"

using ytwist::Error;
using ytwist::GaussRational;
using ytwist::parse_scalar;
using ytwist::print_scalar;
using ytwist::Rational;

namespace {

// Small deterministic generator for property-style tests.
struct Rng {
  uint64_t state = 0x9e3779b97f4a7c15ull;
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  Rational rational() {
    long num = static_cast<long>(next() % 41) - 20;
    long den = static_cast<long>(next() % 9) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  GaussRational scalar() {
    Rational re = rational();
    Rational im = rational();
    return GaussRational(re, im);
  }
};

}  // namespace

TEST_CASE("field arithmetic on fixed values") {
  GaussRational half{Rational(1, 2)};
  CHECK(half + half == GaussRational::one());

  GaussRational i = GaussRational::imaginary_unit();
  CHECK(i * i == -GaussRational::one());

  // (1 + i) / (1 - i): multiply by the conjugate, (1+i)^2 / 2 = i.
  GaussRational a(Rational(1), Rational(1));
  GaussRational b(Rational(1), Rational(-1));
  CHECK(a / b == i);
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(GaussRational::one() / GaussRational::zero(), Error);
}

TEST_CASE("parsing fixed forms") {
  CHECK(parse_scalar("3/2") == GaussRational(Rational(3, 2)));
  CHECK(parse_scalar("-1/2i") ==
        GaussRational(Rational(0), Rational(-1, 2)));
  // canonicalization happens on construction
  CHECK(parse_scalar("2/4+2/4i") ==
        GaussRational(Rational(1, 2), Rational(1, 2)));
  CHECK(parse_scalar("i") == GaussRational::imaginary_unit());
  CHECK(parse_scalar("-i") == -GaussRational::imaginary_unit());
  CHECK(parse_scalar("0") == GaussRational::zero());
  CHECK(parse_scalar("7") == GaussRational(Rational(7)));
  CHECK(parse_scalar("1-2i") == GaussRational(Rational(1), Rational(-2)));
}

TEST_CASE("malformed input names a position") {
  for (const char* bad : {"", "1+", "1+2", "i+i", "1//2", "x", "1/0", "3 "}) {
    CHECK_THROWS_AS(parse_scalar(bad), Error);
  }
  try {
    parse_scalar("1+2");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("print round-trips through parse") {
  Rng rng;
  for (int t = 0; t < 500; ++t) {
    GaussRational x = rng.scalar();
    CHECK(parse_scalar(print_scalar(x)) == x);
  }
  CHECK(print_scalar(GaussRational::zero()) == "0");
  CHECK(print_scalar(GaussRational(Rational(1, 2), Rational(1, 2))) ==
        "1/2+1/2i");
  CHECK(print_scalar(-GaussRational::imaginary_unit()) == "-i");
}

TEST_CASE("field axioms hold exactly on random scalars") {
  Rng rng;
  for (int t = 0; t < 200; ++t) {
    GaussRational a = rng.scalar();
    GaussRational b = rng.scalar();
    GaussRational c = rng.scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == GaussRational::zero());
    if (!a.is_zero()) {
      CHECK(a / a == GaussRational::one());
      CHECK((b / a) * a == b);
    }
  }
}
