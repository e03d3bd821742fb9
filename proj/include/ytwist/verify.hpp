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

#ifndef YTWIST_VERIFY_HPP
#define YTWIST_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ytwist/rmatrix.hpp"

namespace ytwist {

struct Witness {
  size_t row = 0;
  size_t col = 0;
  std::string lhs;
  std::string rhs;
};

// Outcome of one exact check. passed == true iff witness is absent; the
// witness is the lexicographically first differing entry.
struct Verdict {
  std::string name;
  bool passed = false;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
};

Verdict verdict_from_comparison(const std::string& name, const Matrix& lhs,
                                const Matrix& rhs);

// F_12 (Δ (x) id)(F) = F_23 (id (x) Δ)(F) as an exact identity in the
// tensor cube, plus the structural counit statement. A corrupted factor
// order is available as a sensitivity control.
Verdict check_twist_equation(const ChainSpec& spec, const RepTable& table,
                             FactorOrder order = FactorOrder::ExtensionFirst);

// [r12, r13] + [r12, r23] + [r13, r23] = 0 for an arbitrary candidate and
// for the chain's classical r-matrix.
Verdict check_cybe_matrix(const std::string& name, const Matrix& r_candidate);
Verdict check_cybe(const ChainSpec& spec, const RepTable& table);

// R12 R13 R23 = R23 R13 R12 for a constant R on a tensor square.
Verdict check_qybe_constant(const std::string& name, const Matrix& r);
Verdict check_qybe_constant(const ChainSpec& spec, const RepTable& table);

struct SpectralSample {
  Rational u;
  Rational v;
};

// Deterministic 5x5 grid plus a u = v point and a sign-flipped point;
// five distinct values per variable, which exceeds the degree-4 bound of
// the cleared-denominator residual and so decides the identity.
std::vector<SpectralSample> default_spectral_samples();

// Difference-form spectral check; when it fails and try_alternatives is
// set, the other argument conventions are evaluated and the verdict
// reports which of them (if any) holds at every sample.
Verdict check_qybe_spectral(const ChainSpec& spec, const RepTable& table,
                            std::vector<SpectralSample> samples = {},
                            bool try_alternatives = true);

struct LemmaVerdicts {
  Verdict rho_cubed;           // flipped and plain rho both cube to zero
  Verdict factor_exponential;  // per factor, f_k(xi) = exp(xi rho_k)
  Verdict closed_form;         // lemma_R = twisted_R
};

LemmaVerdicts check_lemma(const ChainSpec& spec, const RepTable& table);

// Compares computed level-0 objects for series B against hand-coded
// reference expressions (Jordanian factor, extension factor, rho, and the
// quadratic R expansion). Passing requires the Jordanian and rho to match
// exactly; any extension or R mismatch is itemized entry by entry in the
// notes. Requires N >= 3 so the j > 2 sums are nonempty.
Verdict check_reference_example(int N, const RepTable& table,
                                const Rational& xi);

}  // namespace ytwist

#endif  // YTWIST_VERIFY_HPP
