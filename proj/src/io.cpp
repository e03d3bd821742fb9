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

#include "ytwist/io.hpp"

namespace ytwist {

ChainConfig config_of(const ChainSpec& spec) {
  ChainConfig c;
  c.series = std::string(1, series_letter(spec.series));
  c.rank = spec.N;
  c.depth = spec.p;
  c.xi = print_rational(spec.xi);
  for (const auto& level : spec.levels) {
    c.etas.push_back(print_rational(level.eta));
  }
  return c;
}

ChainSpec spec_from_config(const ChainConfig& config) {
  if (config.series.size() != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "series must be a single letter B or D, got \"" +
                    config.series + "\"");
  }
  Series s = series_from_letter(config.series[0]);
  Rational xi = parse_rational(config.xi);
  std::vector<Rational> etas;
  if (config.etas.empty()) {
    etas.assign(static_cast<size_t>(config.depth) + 1, Rational(1));
  } else {
    for (const auto& t : config.etas) etas.push_back(parse_rational(t));
  }
  return build_chain_spec(s, config.rank, config.depth, xi, etas);
}

Json config_json(const ChainConfig& config) {
  Json j;
  j["series"] = config.series;
  j["rank"] = config.rank;
  j["depth"] = config.depth;
  j["xi"] = config.xi;
  j["etas"] = config.etas;
  return j;
}

Json matrix_document(const Matrix& m, const TensorLeg& legs,
                     const std::string& object_label,
                     const std::optional<ChainConfig>& config,
                     const std::optional<Rational>& u) {
  if (legs.total() != m.rows() || legs.total() != m.cols()) {
    throw Error(ErrorKind::InvalidArgument,
                "matrix_document: leg dimensions do not match the matrix");
  }
  Json j;
  j["object"] = object_label;
  if (config) j["config"] = config_json(*config);
  if (u) j["u"] = print_rational(*u);
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["legs"] = legs.dims;
  Json entries = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) {
      row.push_back(print_scalar(m.at(r, c)));
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Matrix matrix_from_document(const Json& doc) {
  size_t rows = doc.at("rows").get<size_t>();
  size_t cols = doc.at("cols").get<size_t>();
  const Json& entries = doc.at("entries");
  if (entries.size() != rows) {
    throw Error(ErrorKind::Parse, "matrix document has wrong row count");
  }
  Matrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    const Json& row = entries.at(r);
    if (row.size() != cols) {
      throw Error(ErrorKind::Parse, "matrix document has ragged rows");
    }
    for (size_t c = 0; c < cols; ++c) {
      m.at(r, c) = parse_scalar(row.at(c).get<std::string>());
    }
  }
  return m;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["name"] = v.name;
  j["passed"] = v.passed;
  if (v.witness) {
    Json w;
    w["row"] = v.witness->row;
    w["col"] = v.witness->col;
    w["lhs"] = v.witness->lhs;
    w["rhs"] = v.witness->rhs;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["notes"] = v.notes;
  return j;
}

Json report_document(const ChainConfig& config,
                     const std::vector<Verdict>& verdicts) {
  Json j;
  j["tool"] = "ytwist";
  j["config"] = config_json(config);
  Json checks = Json::array();
  bool all = true;
  for (const auto& v : verdicts) {
    all = all && v.passed;
    checks.push_back(verdict_json(v));
  }
  j["checks"] = std::move(checks);
  j["all_passed"] = all;
  return j;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace ytwist
