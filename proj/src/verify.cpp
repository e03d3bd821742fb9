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

#include "ytwist/verify.hpp"

#include <algorithm>
#include <string>

namespace ytwist {

namespace {

size_t tensor_square_side(const Matrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + ": matrix must be square");
  }
  size_t d = 1;
  while (d * d < m.rows()) ++d;
  if (d * d != m.rows()) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + ": dimension " + std::to_string(m.rows()) +
                    " is not a perfect square");
  }
  return d;
}

std::string sample_label(const SpectralSample& s) {
  return "u=" + print_rational(s.u) + " v=" + print_rational(s.v);
}

}  // namespace

Verdict verdict_from_comparison(const std::string& name, const Matrix& lhs,
                                const Matrix& rhs) {
  Verdict v;
  v.name = name;
  auto diff = first_difference(lhs, rhs);
  v.passed = !diff.has_value();
  if (diff) {
    v.witness = Witness{diff->row, diff->col, print_scalar(diff->lhs),
                        print_scalar(diff->rhs)};
  }
  return v;
}

Verdict check_twist_equation(const ChainSpec& spec, const RepTable& table,
                             FactorOrder order) {
  auto [lhs, rhs] = twist_equation_sides(spec, table, order);
  std::string name = order == FactorOrder::ExtensionFirst
                         ? "twist-equation"
                         : "twist-equation[corrupted-order]";
  Verdict v = verdict_from_comparison(name, lhs, rhs);
  v.notes.push_back(
      "counit: both conditions hold structurally; every exponent term is a "
      "generator product with no constant part, so the counit sends each "
      "factor to the identity");
  return v;
}

Verdict check_cybe_matrix(const std::string& name, const Matrix& r) {
  size_t d = tensor_square_side(r, "cybe");
  TensorLeg legs{{d, d, d}};
  Matrix r12 = embed_leg(r, legs, {1, 2});
  Matrix r13 = embed_leg(r, legs, {1, 3});
  Matrix r23 = embed_leg(r, legs, {2, 3});
  Matrix residual = commutator(r12, r13);
  residual += commutator(r12, r23);
  residual += commutator(r13, r23);
  return verdict_from_comparison(name, residual,
                                 Matrix(residual.rows(), residual.cols()));
}

Verdict check_cybe(const ChainSpec& spec, const RepTable& table) {
  return check_cybe_matrix("cybe", classical_r(spec, table));
}

Verdict check_qybe_constant(const std::string& name, const Matrix& r) {
  size_t d = tensor_square_side(r, "qybe");
  TensorLeg legs{{d, d, d}};
  Matrix r12 = embed_leg(r, legs, {1, 2});
  Matrix r13 = embed_leg(r, legs, {1, 3});
  Matrix r23 = embed_leg(r, legs, {2, 3});
  Matrix lhs = r12 * r13 * r23;
  Matrix rhs = r23 * r13 * r12;
  return verdict_from_comparison(name, lhs, rhs);
}

Verdict check_qybe_constant(const ChainSpec& spec, const RepTable& table) {
  return check_qybe_constant("qybe-constant", twisted_R(spec, table));
}

std::vector<SpectralSample> default_spectral_samples() {
  const long us[] = {1, 2, 3, 4, 6};
  const std::pair<long, long> vs[] = {{1, 3}, {7, 3}, {11, 3}, {14, 3},
                                      {17, 3}};
  std::vector<SpectralSample> out;
  for (long u : us) {
    for (auto [num, den] : vs) {
      Rational v(num, den);
      v.canonicalize();
      out.push_back({Rational(u), v});
    }
  }
  out.push_back({Rational(2), Rational(2)});            // u = v
  out.push_back({Rational(-1), Rational(-1, 3)});       // sign-flipped
  out.back().v.canonicalize();
  return out;
}

namespace {

struct Convention {
  const char* name;
  // arguments of the 12, 13, 23 legs for samples (u, v)
  Rational (*a12)(const Rational&, const Rational&);
  Rational (*a13)(const Rational&, const Rational&);
  Rational (*a23)(const Rational&, const Rational&);
};

const Convention kConventions[] = {
    {"difference",
     [](const Rational& u, const Rational& v) -> Rational { return u - v; },
     [](const Rational& u, const Rational&) -> Rational { return u; },
     [](const Rational&, const Rational& v) -> Rational { return v; }},
    {"shifted-sum",
     [](const Rational& u, const Rational&) -> Rational { return u; },
     [](const Rational& u, const Rational& v) -> Rational { return u + v; },
     [](const Rational&, const Rational& v) -> Rational { return v; }},
    {"reversed-difference",
     [](const Rational& u, const Rational& v) -> Rational { return v - u; },
     [](const Rational&, const Rational& v) -> Rational { return v; },
     [](const Rational& u, const Rational&) -> Rational { return u; }},
};

}  // namespace

Verdict check_qybe_spectral(const ChainSpec& spec, const RepTable& table,
                            std::vector<SpectralSample> samples,
                            bool try_alternatives) {
  if (samples.empty()) samples = default_spectral_samples();
  SpectralRMatrix sp = make_spectral(spec, table);
  const Rational pole = -sp.kappa_shift;
  for (const auto& s : samples) {
    if (s.u == pole || s.v == pole || s.u - s.v == pole) {
      throw Error(ErrorKind::Domain,
                  "sample " + sample_label(s) + " hits the pole u = " +
                      print_rational(pole));
    }
  }

  Verdict v;
  v.name = "qybe-spectral";
  const size_t d = sp.dim;
  TensorLeg legs{{d, d, d}};

  std::string passing_convention;
  for (const Convention& conv : kConventions) {
    bool all_pass = true;
    std::vector<std::string> lines;
    for (const auto& s : samples) {
      Rational w12 = conv.a12(s.u, s.v);
      Rational w13 = conv.a13(s.u, s.v);
      Rational w23 = conv.a23(s.u, s.v);
      if (w12 == pole || w13 == pole || w23 == pole) {
        lines.push_back(std::string(conv.name) + " " + sample_label(s) +
                        ": skipped (pole)");
        continue;
      }
      Matrix r12 = embed_leg(sp.at(w12), legs, {1, 2});
      Matrix r13 = embed_leg(sp.at(w13), legs, {1, 3});
      Matrix r23 = embed_leg(sp.at(w23), legs, {2, 3});
      Matrix lhs = r12 * r13 * r23;
      Matrix rhs = r23 * r13 * r12;
      auto diff = first_difference(lhs, rhs);
      if (diff) {
        all_pass = false;
        lines.push_back(std::string(conv.name) + " " + sample_label(s) +
                        ": FAIL at (" + std::to_string(diff->row) + "," +
                        std::to_string(diff->col) + ") " +
                        print_scalar(diff->lhs) + " vs " +
                        print_scalar(diff->rhs));
        if (!v.witness) {
          v.witness = Witness{diff->row, diff->col, print_scalar(diff->lhs),
                              print_scalar(diff->rhs)};
        }
      } else {
        lines.push_back(std::string(conv.name) + " " + sample_label(s) +
                        ": pass");
      }
    }
    v.notes.insert(v.notes.end(), lines.begin(), lines.end());
    if (all_pass) {
      passing_convention = conv.name;
      break;
    }
    if (!try_alternatives) break;
  }

  v.passed = !passing_convention.empty();
  if (v.passed) {
    v.witness.reset();
    v.notes.push_back("convention: " + passing_convention);
  } else {
    v.notes.push_back(try_alternatives
                          ? "no argument convention satisfies the identity "
                            "at all samples"
                          : "difference convention fails");
  }
  v.notes.push_back(
      "completeness: cleared-denominator residual has degree <= 4 per "
      "variable; the sample set provides at least 5 distinct values per "
      "variable, so passing every sample decides the identity");
  return v;
}

LemmaVerdicts check_lemma(const ChainSpec& spec, const RepTable& table) {
  LemmaVerdicts out;
  RhoMatrix rho = rho_matrix(spec, table);

  Matrix cube = rho.rho * rho.rho * rho.rho;
  out.rho_cubed = verdict_from_comparison("lemma.rho-cubed", cube,
                                          Matrix(cube.rows(), cube.cols()));
  if (auto idx = nilpotency_index(rho.rho)) {
    out.rho_cubed.notes.push_back("nilpotency index of rho: " +
                                  std::to_string(*idx));
  }

  out.factor_exponential.name = "lemma.factor-exponential";
  out.factor_exponential.passed = true;
  for (int k = 0; k <= spec.p; ++k) {
    TwistFactorMatrices f = factor_matrices(spec, k, table);
    Matrix factor = f.extension * f.jordanian;
    Matrix exponent =
        GaussRational(spec.xi) * f.rho_level(spec.levels[k].eta);
    Matrix expected = unipotent_exp(exponent);
    auto diff = first_difference(factor, expected);
    if (diff) {
      out.factor_exponential.passed = false;
      if (!out.factor_exponential.witness) {
        out.factor_exponential.witness =
            Witness{diff->row, diff->col, print_scalar(diff->lhs),
                    print_scalar(diff->rhs)};
      }
      out.factor_exponential.notes.push_back(
          "level " + std::to_string(k) + ": factor differs from exp(xi rho_k)");
    } else {
      out.factor_exponential.notes.push_back(
          "level " + std::to_string(k) + ": factor equals exp(xi rho_k)");
    }
  }

  out.closed_form = verdict_from_comparison(
      "lemma.closed-form", lemma_R(spec, table), twisted_R(spec, table));
  out.closed_form.notes.push_back(
      "closed form: (I + xi T + xi^2/2 T^2)(I - xi rho + xi^2/2 rho^2), "
      "T = flip(rho), compared against the factor-wise twisted R");
  return out;
}

namespace {

void itemize_differences(const Matrix& computed, const Matrix& reference,
                         const std::string& label, size_t limit,
                         std::vector<std::string>& notes) {
  size_t count = 0;
  for (size_t r = 0; r < computed.rows(); ++r) {
    for (size_t c = 0; c < computed.cols(); ++c) {
      if (computed.at(r, c) != reference.at(r, c)) {
        if (count < limit) {
          notes.push_back(label + " (" + std::to_string(r) + "," +
                          std::to_string(c) + "): computed " +
                          print_scalar(computed.at(r, c)) + ", reference " +
                          print_scalar(reference.at(r, c)));
        }
        ++count;
      }
    }
  }
  if (count > limit) {
    notes.push_back(label + ": " + std::to_string(count - limit) +
                    " further differing entries");
  }
  if (count == 0) {
    notes.push_back(label + ": exact match");
  }
}

}  // namespace

Verdict check_reference_example(int N, const RepTable& table,
                                const Rational& xi) {
  if (table.series() != Series::B || table.rank() != N || N < 3) {
    throw Error(ErrorKind::InvalidArgument,
                "reference example requires series B with rank N >= 3");
  }
  ChainSpec spec = build_chain_spec(Series::B, N, 0, xi, {Rational(1)});
  TwistFactorMatrices f = factor_matrices(spec, 0, table);
  Matrix rho = rho_matrix(spec, table).rho;
  Matrix rmat = twisted_R(spec, table);

  const Matrix h = table.cartan(1, 2);
  const Matrix e = table.generator(Root::basis(N, 1) + Root::basis(N, 2));
  const Matrix e1 = table.generator(Root::basis(N, 1));
  const Matrix e2 = table.generator(Root::basis(N, 2));
  const GaussRational xs{xi};
  const GaussRational two{Rational(2)};

  // Extension exponent: E1 (x) E2 + 2 sum_{j>2} E_{1±j} (x) E_{2∓j}.
  Matrix ext_exponent = kron(e1, e2);
  for (int j = 3; j <= N; ++j) {
    Root ej = Root::basis(N, j);
    Matrix e1p = table.generator(Root::basis(N, 1) + ej);
    Matrix e1m = table.generator(Root::basis(N, 1) - ej);
    Matrix e2p = table.generator(Root::basis(N, 2) + ej);
    Matrix e2m = table.generator(Root::basis(N, 2) - ej);
    ext_exponent += two * (kron(e1p, e2m) + kron(e1m, e2p));
  }

  Matrix ref_jordanian = unipotent_exp(xs * kron(h, e));
  Matrix ref_extension = unipotent_exp(xs * ext_exponent);
  Matrix ref_rho = kron(h, e) + ext_exponent;

  // Quadratic R expansion as printed: first order keeps the wedge on the
  // Cartan but plain tensors on the extension part.
  Matrix ref_r = Matrix::identity(table.dim() * table.dim());
  ref_r -= xs * (kron(h, e) - kron(e, h) + ext_exponent);
  GaussRational half_xi2{xi * xi / 2};
  ref_r += half_xi2 * (kron(e1 * e1, e2 * e2) + kron(e2 * e2, e1 * e1) +
                       two * kron(e, e) - two * kron(e2 * e1, e1 * e2));
  GaussRational two_xi2{xi * xi * 2};
  for (int j = 3; j <= N; ++j) {
    Root ej = Root::basis(N, j);
    Matrix e1p = table.generator(Root::basis(N, 1) + ej);
    Matrix e1m = table.generator(Root::basis(N, 1) - ej);
    Matrix e2p = table.generator(Root::basis(N, 2) + ej);
    Matrix e2m = table.generator(Root::basis(N, 2) - ej);
    Matrix sum = kron(e1p * e1m, e2m * e2p) + kron(e1m * e1p, e2p * e2m);
    sum += kron(e2m * e2p, e1p * e1m) + kron(e2p * e2m, e1m * e1p);
    sum -= two * (kron(e2m * e1p, e1p * e2m) + kron(e2p * e1m, e1m * e2p));
    ref_r += two_xi2 * sum;
  }

  Verdict v;
  v.name = "reference-example";
  bool jordanian_ok = f.jordanian == ref_jordanian;
  bool rho_ok = rho == ref_rho;
  v.passed = jordanian_ok && rho_ok;
  v.notes.push_back(std::string("jordanian factor: ") +
                    (jordanian_ok ? "exact match" : "MISMATCH"));
  v.notes.push_back(std::string("rho: ") +
                    (rho_ok ? "exact match" : "MISMATCH"));
  if (!jordanian_ok) {
    auto diff = first_difference(f.jordanian, ref_jordanian);
    v.witness = Witness{diff->row, diff->col, print_scalar(diff->lhs),
                        print_scalar(diff->rhs)};
  } else if (!rho_ok) {
    auto diff = first_difference(rho, ref_rho);
    v.witness = Witness{diff->row, diff->col, print_scalar(diff->lhs),
                        print_scalar(diff->rhs)};
  }
  itemize_differences(f.extension, ref_extension, "extension", 40, v.notes);
  itemize_differences(rmat, ref_r, "R", 40, v.notes);
  return v;
}

}  // namespace ytwist
