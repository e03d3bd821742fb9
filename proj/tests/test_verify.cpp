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

#include <algorithm>
#include <set>

#include "ytwist/io.hpp"
#include "ytwist/verify.hpp"

using namespace ytwist;

namespace {

ChainSpec spec_b(int n, int p, Rational xi, std::vector<Rational> etas = {}) {
  if (etas.empty()) etas.assign(p + 1, Rational(1));
  return build_chain_spec(Series::B, n, p, xi, etas);
}

bool has_note_containing(const Verdict& v, const std::string& needle) {
  return std::any_of(v.notes.begin(), v.notes.end(),
                     [&](const std::string& n) {
                       return n.find(needle) != std::string::npos;
                     });
}

}  // namespace

TEST_CASE("twist equation verdicts") {
  RepTable t = RepTable::build(Series::B, 2);
  Verdict trivial = check_twist_equation(spec_b(2, 0, Rational(0)), t);
  CHECK(trivial.passed);

  Verdict v = check_twist_equation(spec_b(2, 0, Rational(1)), t);
  CHECK(v.passed);
  CHECK(!v.witness.has_value());
  CHECK(has_note_containing(v, "counit"));

  Verdict bad = check_twist_equation(spec_b(2, 0, Rational(1)), t,
                                     FactorOrder::JordanianFirst);
  CHECK(!bad.passed);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->lhs != bad.witness->rhs);
}

TEST_CASE("cybe verdicts and the non-antisymmetrized control") {
  RepTable t = RepTable::build(Series::B, 2);
  ChainSpec spec = spec_b(2, 0, Rational(1));
  CHECK(check_cybe(spec, t).passed);

  // a zero candidate passes trivially
  CHECK(check_cybe_matrix("zero", Matrix(25, 25)).passed);

  // rho itself is not a solution of the classical identity
  Verdict bad = check_cybe_matrix("rho", rho_matrix(spec, t).rho);
  CHECK(!bad.passed);
  CHECK(bad.witness.has_value());
}

TEST_CASE("constant qybe verdicts and the P+K control") {
  RepTable t = RepTable::build(Series::B, 3);
  CHECK(check_qybe_constant("identity", Matrix::identity(25)).passed);
  CHECK(check_qybe_constant(spec_b(3, 0, Rational(1)), t).passed);

  auto [p, k] = p_and_k(3);
  CHECK(check_qybe_constant("P", p).passed);
  Verdict bad = check_qybe_constant("P+K", p + k);
  CHECK(!bad.passed);
  CHECK(bad.witness.has_value());

  Matrix not_square(6, 6);
  CHECK_THROWS_AS(check_qybe_constant("bad-dim", not_square), Error);
}

TEST_CASE("spectral qybe for the undeformed rank-2 matrix") {
  RepTable t = RepTable::build(Series::B, 2);
  std::vector<SpectralSample> samples;
  for (long u = 1; u <= 3; ++u) {
    for (long num : {1, 7, 11}) {
      Rational v(num, 3);
      v.canonicalize();
      samples.push_back({Rational(u), v});
    }
  }
  Verdict v = check_qybe_spectral(spec_b(2, 0, Rational(0)), t, samples);
  CHECK(v.passed);
  CHECK(has_note_containing(v, "convention: difference"));
  // one record per sample
  int sample_lines = 0;
  for (const auto& note : v.notes) {
    if (note.find("difference u=") == 0) ++sample_lines;
  }
  CHECK(sample_lines == 9);
}

TEST_CASE("spectral samples hitting the pole are rejected up front") {
  RepTable t = RepTable::build(Series::B, 2);
  std::vector<SpectralSample> samples = {{Rational(-3, 2), Rational(1)}};
  CHECK_THROWS_AS(
      check_qybe_spectral(spec_b(2, 0, Rational(0)), t, samples), Error);
  std::vector<SpectralSample> diff_pole = {{Rational(1), Rational(5, 2)}};
  CHECK_THROWS_AS(
      check_qybe_spectral(spec_b(2, 0, Rational(0)), t, diff_pole), Error);
}

TEST_CASE("default spectral samples are pole-free and well spread") {
  auto samples = default_spectral_samples();
  CHECK(samples.size() == 27);
  std::set<Rational> us, vs;
  for (const auto& s : samples) {
    us.insert(s.u);
    vs.insert(s.v);
  }
  CHECK(us.size() >= 5);
  CHECK(vs.size() >= 5);
  bool has_equal = false;
  for (const auto& s : samples) has_equal = has_equal || s.u == s.v;
  CHECK(has_equal);
}

TEST_CASE("lemma verdicts at depth 0") {
  RepTable t = RepTable::build(Series::B, 2);
  LemmaVerdicts lv = check_lemma(spec_b(2, 0, Rational(1)), t);
  CHECK(lv.rho_cubed.passed);
  CHECK(lv.factor_exponential.passed);
  CHECK(lv.closed_form.passed);

  LemmaVerdicts trivial = check_lemma(spec_b(2, 0, Rational(0)), t);
  CHECK(trivial.rho_cubed.passed);
  CHECK(trivial.factor_exponential.passed);
  CHECK(trivial.closed_form.passed);
}

TEST_CASE("lemma verdicts at depth 1 record the split outcome") {
  RepTable t = RepTable::build(Series::B, 4);
  LemmaVerdicts lv = check_lemma(
      spec_b(4, 1, Rational(1), {Rational(1), Rational(1)}), t);
  CHECK(lv.rho_cubed.passed);
  CHECK(lv.factor_exponential.passed);
  // the chain-wide closed form fails beyond depth 0; the verdict carries
  // the witness entry
  CHECK(!lv.closed_form.passed);
  CHECK(lv.closed_form.witness.has_value());
}

TEST_CASE("reference example at rank 3") {
  RepTable t = RepTable::build(Series::B, 3);
  Verdict v = check_reference_example(3, t, Rational(1));
  CHECK(v.passed);
  CHECK(has_note_containing(v, "jordanian factor: exact match"));
  CHECK(has_note_containing(v, "rho: exact match"));
  CHECK(has_note_containing(v, "extension: exact match"));
  // the printed quadratic R expansion misses the flipped extension terms
  // at first order; every mismatch is itemized
  CHECK(has_note_containing(v, "R ("));
}

TEST_CASE("reference example preconditions") {
  RepTable t2 = RepTable::build(Series::B, 2);
  CHECK_THROWS_AS(check_reference_example(2, t2, Rational(1)), Error);
  RepTable td = RepTable::build(Series::D, 4);
  CHECK_THROWS_AS(check_reference_example(4, td, Rational(1)), Error);
}

TEST_CASE("verdict serialization shape") {
  RepTable t = RepTable::build(Series::B, 2);
  ChainSpec spec = spec_b(2, 0, Rational(1));
  Verdict v = check_twist_equation(spec, t);
  Json j = verdict_json(v);
  CHECK(j["name"] == "twist-equation");
  CHECK(j["passed"] == true);
  CHECK(j["witness"].is_null());

  Json report = report_document(config_of(spec), {v});
  CHECK(report["all_passed"] == true);
  CHECK(report["checks"].size() == 1);
  CHECK(report["config"]["series"] == "B");
}
