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

#include "ytwist.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "ytwist/io.hpp"

using ytwist::ChainConfig;
using ytwist::ChainSpec;
using ytwist::Error;
using ytwist::ErrorKind;
using ytwist::Matrix;
using ytwist::Rational;
using ytwist::RepTable;
using ytwist::Root;
using ytwist::TensorLeg;
using ytwist::Verdict;

struct ytw_table {
  RepTable table;
};

struct ytw_chain {
  ChainSpec spec;
};

struct ytw_matrix {
  Matrix m;
  ytwist::Json doc;
};

namespace {

thread_local std::string g_last_error = "no error";

int set_error(ErrorKind kind, const std::string& message) {
  g_last_error = message;
  switch (kind) {
    case ErrorKind::InvalidArgument:
      return YTW_ERR_INVALID_ARGUMENT;
    case ErrorKind::Parse:
      return YTW_ERR_PARSE;
    case ErrorKind::Domain:
      return YTW_ERR_DOMAIN;
  }
  return YTW_ERR_INTERNAL;
}

int set_invalid(const std::string& message) {
  return set_error(ErrorKind::InvalidArgument, message);
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return set_error(e.kind(), e.what());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return YTW_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Exported table entries: every root generator, then the Cartan matrices
// H_{e_i+e_j}, in deterministic order.
std::vector<std::string> table_entry_labels(const RepTable& t) {
  std::vector<std::string> labels;
  for (const Root& r : t.roots()) labels.push_back(r.label());
  for (int i = 1; i <= t.rank(); ++i) {
    for (int j = i + 1; j <= t.rank(); ++j) {
      labels.push_back("cartan_e" + std::to_string(i) + "+e" +
                       std::to_string(j));
    }
  }
  return labels;
}

bool table_entry_matrix(const RepTable& t, const std::string& label,
                        Matrix* out) {
  for (const Root& r : t.roots()) {
    if (r.label() == label) {
      *out = t.generator(r);
      return true;
    }
  }
  for (int i = 1; i <= t.rank(); ++i) {
    for (int j = i + 1; j <= t.rank(); ++j) {
      std::string cl =
          "cartan_e" + std::to_string(i) + "+e" + std::to_string(j);
      if (cl == label) {
        *out = t.cartan(i, j);
        return true;
      }
    }
  }
  return false;
}

}  // namespace

extern "C" {

const char* ytw_version(void) { return "0.1.0"; }

const char* ytw_last_error(void) { return g_last_error.c_str(); }

void ytw_string_free(char* s) { std::free(s); }

int ytw_table_create(char series, int rank, ytw_table** out) {
  if (out == nullptr) return set_invalid("null output pointer");
  *out = nullptr;
  return guarded([&] {
    auto t = new ytw_table{RepTable::build(ytwist::series_from_letter(series),
                                           rank)};
    *out = t;
    return YTW_OK;
  });
}

void ytw_table_free(ytw_table* t) { delete t; }

int ytw_table_dim(const ytw_table* t) {
  return t ? static_cast<int>(t->table.dim()) : 0;
}

int ytw_table_entry_count(const ytw_table* t) {
  if (t == nullptr) return 0;
  return static_cast<int>(table_entry_labels(t->table).size());
}

int ytw_table_entry_label(const ytw_table* t, int index, char* buf,
                          size_t bufsize) {
  if (t == nullptr || buf == nullptr) return set_invalid("null argument");
  return guarded([&] {
    auto labels = table_entry_labels(t->table);
    if (index < 0 || static_cast<size_t>(index) >= labels.size()) {
      return set_invalid("entry index out of range");
    }
    const std::string& label = labels[index];
    if (label.size() + 1 > bufsize) {
      return set_invalid("label buffer too small");
    }
    std::memcpy(buf, label.c_str(), label.size() + 1);
    return YTW_OK;
  });
}

int ytw_table_entry_json(const ytw_table* t, const char* label,
                         char** out_json) {
  if (t == nullptr || label == nullptr || out_json == nullptr) {
    return set_invalid("null argument");
  }
  *out_json = nullptr;
  return guarded([&] {
    Matrix m;
    if (!table_entry_matrix(t->table, label, &m)) {
      return set_invalid(std::string("unknown table entry \"") + label +
                         "\"");
    }
    ytwist::Json doc = ytwist::matrix_document(
        m, TensorLeg{{t->table.dim()}}, std::string("generator:") + label,
        std::nullopt, std::nullopt);
    doc["series"] = std::string(1, ytwist::series_letter(t->table.series()));
    doc["rank"] = t->table.rank();
    *out_json = dup_string(ytwist::dump_document(doc));
    return YTW_OK;
  });
}

int ytw_chain_create(char series, int rank, int depth, const char* xi,
                     const char* const* etas, size_t eta_count,
                     ytw_chain** out) {
  if (out == nullptr || xi == nullptr) return set_invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    ChainConfig config;
    config.series = std::string(1, series);
    config.rank = rank;
    config.depth = depth;
    config.xi = xi;
    for (size_t i = 0; i < eta_count; ++i) {
      if (etas == nullptr || etas[i] == nullptr) {
        return set_invalid("null eta entry");
      }
      config.etas.emplace_back(etas[i]);
    }
    *out = new ytw_chain{ytwist::spec_from_config(config)};
    return YTW_OK;
  });
}

void ytw_chain_free(ytw_chain* c) { delete c; }

int ytw_chain_build(const ytw_table* t, const ytw_chain* c, const char* target,
                    const char* u, ytw_matrix** out) {
  if (t == nullptr || c == nullptr || target == nullptr || out == nullptr) {
    return set_invalid("null argument");
  }
  *out = nullptr;
  return guarded([&] {
    if (t->table.series() != c->spec.series || t->table.rank() != c->spec.N) {
      return set_invalid("table and chain disagree on series or rank");
    }
    const std::string tgt(target);
    const size_t d = t->table.dim();
    ChainConfig config = ytwist::config_of(c->spec);
    Matrix m;
    std::optional<Rational> uval;
    if (tgt == "F") {
      m = ytwist::chain_element(c->spec, t->table);
    } else if (tgt == "rho") {
      m = ytwist::rho_matrix(c->spec, t->table).rho;
    } else if (tgt == "r") {
      m = ytwist::classical_r(c->spec, t->table);
    } else if (tgt == "R") {
      m = ytwist::twisted_R(c->spec, t->table);
    } else if (tgt == "Ru") {
      if (u == nullptr) {
        return set_invalid("target Ru requires a spectral parameter u");
      }
      uval = ytwist::parse_rational(u);
      m = ytwist::make_spectral(c->spec, t->table).at(*uval);
    } else {
      return set_invalid("unknown build target \"" + tgt +
                         "\" (expected F, rho, r, R or Ru)");
    }
    ytwist::Json doc = ytwist::matrix_document(m, TensorLeg{{d, d}}, tgt,
                                               config, uval);
    *out = new ytw_matrix{std::move(m), std::move(doc)};
    return YTW_OK;
  });
}

void ytw_matrix_free(ytw_matrix* m) { delete m; }

int ytw_matrix_rows(const ytw_matrix* m) {
  return m ? static_cast<int>(m->m.rows()) : 0;
}

int ytw_matrix_cols(const ytw_matrix* m) {
  return m ? static_cast<int>(m->m.cols()) : 0;
}

int ytw_matrix_entry(const ytw_matrix* m, int row, int col,
                     char** out_scalar) {
  if (m == nullptr || out_scalar == nullptr) {
    return set_invalid("null argument");
  }
  *out_scalar = nullptr;
  return guarded([&] {
    if (row < 0 || col < 0 || static_cast<size_t>(row) >= m->m.rows() ||
        static_cast<size_t>(col) >= m->m.cols()) {
      return set_invalid("matrix index out of range");
    }
    *out_scalar = dup_string(ytwist::print_scalar(m->m.at(row, col)));
    return YTW_OK;
  });
}

int ytw_matrix_json(const ytw_matrix* m, char** out_json) {
  if (m == nullptr || out_json == nullptr) return set_invalid("null argument");
  *out_json = nullptr;
  return guarded([&] {
    *out_json = dup_string(ytwist::dump_document(m->doc));
    return YTW_OK;
  });
}

int ytw_verify(const ytw_table* t, const ytw_chain* c,
               const char* const* checks, size_t check_count,
               const char* const* samples, size_t sample_count,
               char** out_report_json) {
  if (t == nullptr || c == nullptr || out_report_json == nullptr) {
    return set_invalid("null argument");
  }
  *out_report_json = nullptr;
  return guarded([&] {
    if (t->table.series() != c->spec.series || t->table.rank() != c->spec.N) {
      return set_invalid("table and chain disagree on series or rank");
    }
    std::vector<std::string> names;
    if (checks == nullptr || check_count == 0) {
      names = {"twist", "cybe", "qybe", "lemma"};
      if (c->spec.series == ytwist::Series::B) {
        names.push_back("spectral");
        if (c->spec.N >= 3) names.push_back("reference");
      }
    } else {
      for (size_t i = 0; i < check_count; ++i) {
        if (checks[i] == nullptr) return set_invalid("null check name");
        names.emplace_back(checks[i]);
      }
    }
    std::vector<ytwist::SpectralSample> sample_values;
    for (size_t i = 0; i < sample_count; ++i) {
      if (samples == nullptr || samples[i] == nullptr) {
        return set_invalid("null sample entry");
      }
      std::string s(samples[i]);
      size_t comma = s.find(',');
      if (comma == std::string::npos) {
        return set_invalid("sample \"" + s + "\" is not of the form u,v");
      }
      sample_values.push_back(
          {ytwist::parse_rational(s.substr(0, comma)),
           ytwist::parse_rational(s.substr(comma + 1))});
    }

    std::vector<Verdict> verdicts;
    for (const std::string& name : names) {
      if (name == "twist") {
        verdicts.push_back(ytwist::check_twist_equation(c->spec, t->table));
      } else if (name == "cybe") {
        verdicts.push_back(ytwist::check_cybe(c->spec, t->table));
      } else if (name == "qybe") {
        verdicts.push_back(ytwist::check_qybe_constant(c->spec, t->table));
      } else if (name == "spectral") {
        verdicts.push_back(
            ytwist::check_qybe_spectral(c->spec, t->table, sample_values));
      } else if (name == "lemma") {
        ytwist::LemmaVerdicts lv = ytwist::check_lemma(c->spec, t->table);
        verdicts.push_back(std::move(lv.rho_cubed));
        verdicts.push_back(std::move(lv.factor_exponential));
        verdicts.push_back(std::move(lv.closed_form));
      } else if (name == "reference") {
        verdicts.push_back(ytwist::check_reference_example(
            c->spec.N, t->table, c->spec.xi));
      } else {
        return set_invalid("unknown check \"" + name + "\"");
      }
    }
    ytwist::Json report =
        ytwist::report_document(ytwist::config_of(c->spec), verdicts);
    *out_report_json = dup_string(ytwist::dump_document(report));
    bool all = report["all_passed"].get<bool>();
    if (!all) {
      g_last_error = "one or more verification checks failed";
      return YTW_ERR_CHECK_FAILED;
    }
    return YTW_OK;
  });
}

}  // extern "C"
