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

#ifndef YTWIST_IO_HPP
#define YTWIST_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ytwist/verify.hpp"

namespace ytwist {

using Json = nlohmann::ordered_json;

// Flat chain configuration as it appears on the CLI and inside every
// exported document. Scalars stay strings end to end; nothing is ever
// converted through floating point.
struct ChainConfig {
  std::string series;
  int rank = 0;
  int depth = 0;
  std::string xi = "1";
  std::vector<std::string> etas;
};

ChainConfig config_of(const ChainSpec& spec);
ChainSpec spec_from_config(const ChainConfig& config);

Json config_json(const ChainConfig& config);

// MatrixDocument: rows, cols, legs, entries as scalar strings, plus a
// meta block naming the exported object and echoing the configuration.
Json matrix_document(const Matrix& m, const TensorLeg& legs,
                     const std::string& object_label,
                     const std::optional<ChainConfig>& config,
                     const std::optional<Rational>& u);

Matrix matrix_from_document(const Json& doc);

Json verdict_json(const Verdict& v);
Json report_document(const ChainConfig& config,
                     const std::vector<Verdict>& verdicts);

// Canonical serialization used for every file the tools write; identical
// inputs yield byte-identical output.
std::string dump_document(const Json& doc);

}  // namespace ytwist

#endif  // YTWIST_IO_HPP
