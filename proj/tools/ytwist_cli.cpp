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

// Command-line front end. Everything below goes through the C interface
// in ytwist.h; exit codes are 0 (all good), 1 (a verification check
// failed), 2 (usage, configuration or domain error).

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "ytwist.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

[[nodiscard]] int report_error(const std::string& where) {
  std::cerr << "ytwist: " << where << ": " << ytw_last_error() << "\n";
  return kExitUsage;
}

bool write_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "ytwist: cannot open " << path << " for writing\n";
    return false;
  }
  out << data;
  return out.good();
}

struct ChainOptions {
  std::string series = "B";
  int rank = 2;
  int depth = 0;
  std::string xi = "1";
  std::vector<std::string> etas;
};

void add_chain_options(CLI::App* cmd, ChainOptions* opts) {
  cmd->add_option("--series", opts->series, "series, B or D")
      ->check(CLI::IsMember({"B", "D"}));
  cmd->add_option("--rank", opts->rank, "rank N >= 2")->required();
  cmd->add_option("--depth", opts->depth, "chain depth p (levels 0..p)");
  cmd->add_option("--xi", opts->xi, "deformation parameter (rational)");
  cmd->add_option("--eta", opts->etas,
                  "per-level eta, repeatable, depth+1 values (default 1)");
}

using ChainHandle = std::unique_ptr<ytw_chain, decltype(&ytw_chain_free)>;
using TableHandle = std::unique_ptr<ytw_table, decltype(&ytw_table_free)>;

int make_handles(const ChainOptions& opts, TableHandle* table,
                 ChainHandle* chain) {
  ytw_table* t = nullptr;
  if (ytw_table_create(opts.series[0], opts.rank, &t) != YTW_OK) {
    return report_error("table");
  }
  table->reset(t);
  std::vector<const char*> etas;
  for (const auto& e : opts.etas) etas.push_back(e.c_str());
  ytw_chain* c = nullptr;
  if (ytw_chain_create(opts.series[0], opts.rank, opts.depth, opts.xi.c_str(),
                       etas.empty() ? nullptr : etas.data(), etas.size(),
                       &c) != YTW_OK) {
    return report_error("chain");
  }
  chain->reset(c);
  return kExitOk;
}

int run_generators(const std::string& series, int rank,
                   const std::string& out_dir) {
  ytw_table* raw = nullptr;
  if (ytw_table_create(series[0], rank, &raw) != YTW_OK) {
    return report_error("table");
  }
  TableHandle table(raw, &ytw_table_free);
  std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);

  int count = ytw_table_entry_count(table.get());
  for (int i = 0; i < count; ++i) {
    char label[128];
    if (ytw_table_entry_label(table.get(), i, label, sizeof(label)) !=
        YTW_OK) {
      return report_error("entry label");
    }
    char* json = nullptr;
    if (ytw_table_entry_json(table.get(), label, &json) != YTW_OK) {
      return report_error("entry json");
    }
    std::string data(json);
    ytw_string_free(json);
    std::string name(label);
    std::filesystem::path file =
        dir / (name.rfind("cartan_", 0) == 0 ? name + ".json"
                                             : "gen_" + name + ".json");
    if (!write_file(file, data)) return kExitUsage;
  }
  std::cout << "wrote " << count << " documents to " << dir.string() << "\n";
  return kExitOk;
}

int run_build(const ChainOptions& opts, const std::vector<std::string>& targets,
              const std::string& u, const std::string& out_dir) {
  TableHandle table(nullptr, &ytw_table_free);
  ChainHandle chain(nullptr, &ytw_chain_free);
  if (int rc = make_handles(opts, &table, &chain); rc != kExitOk) return rc;

  std::vector<std::string> wanted = targets;
  if (wanted.empty()) {
    wanted = {"F", "rho", "r", "R"};
    if (!u.empty()) wanted.push_back("Ru");
  }
  std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);

  for (const std::string& target : wanted) {
    ytw_matrix* m = nullptr;
    if (ytw_chain_build(table.get(), chain.get(), target.c_str(),
                        u.empty() ? nullptr : u.c_str(), &m) != YTW_OK) {
      return report_error("build " + target);
    }
    char* json = nullptr;
    int rc = ytw_matrix_json(m, &json);
    std::string data = rc == YTW_OK ? json : "";
    if (json) ytw_string_free(json);
    ytw_matrix_free(m);
    if (rc != YTW_OK) return report_error("export " + target);
    if (!write_file(dir / (target + ".json"), data)) return kExitUsage;
  }
  std::cout << "wrote " << wanted.size() << " documents to " << dir.string()
            << "\n";
  return kExitOk;
}

int run_verify(const ChainOptions& opts, const std::vector<std::string>& checks,
               const std::vector<std::string>& samples,
               const std::string& out_path) {
  TableHandle table(nullptr, &ytw_table_free);
  ChainHandle chain(nullptr, &ytw_chain_free);
  if (int rc = make_handles(opts, &table, &chain); rc != kExitOk) return rc;

  std::vector<const char*> check_ptrs, sample_ptrs;
  for (const auto& c : checks) check_ptrs.push_back(c.c_str());
  for (const auto& s : samples) sample_ptrs.push_back(s.c_str());

  char* report = nullptr;
  int rc = ytw_verify(table.get(), chain.get(),
                      check_ptrs.empty() ? nullptr : check_ptrs.data(),
                      check_ptrs.size(),
                      sample_ptrs.empty() ? nullptr : sample_ptrs.data(),
                      sample_ptrs.size(), &report);
  if (rc != YTW_OK && rc != YTW_ERR_CHECK_FAILED) {
    return report_error("verify");
  }
  std::string data(report);
  ytw_string_free(report);
  if (out_path.empty()) {
    std::cout << data;
  } else if (!write_file(out_path, data)) {
    return kExitUsage;
  }
  return rc == YTW_OK ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact twist chains and R-matrices for the orthogonal series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ytw_version()));

  auto* generators =
      app.add_subcommand("generators", "export defining-representation "
                                       "generator matrices as JSON");
  std::string gen_series = "B";
  int gen_rank = 2;
  std::string gen_out = ".";
  generators->add_option("--series", gen_series, "series, B or D")
      ->check(CLI::IsMember({"B", "D"}));
  generators->add_option("--rank", gen_rank, "rank N >= 2")->required();
  generators->add_option("--out", gen_out, "output directory");

  auto* build = app.add_subcommand(
      "build", "construct chain matrices and export them as JSON");
  ChainOptions build_opts;
  add_chain_options(build, &build_opts);
  std::vector<std::string> targets;
  std::string u_value;
  std::string build_out = ".";
  build->add_option("--target", targets,
                    "matrix to export: F, rho, r, R, Ru (repeatable; "
                    "default F rho r R)")
      ->check(CLI::IsMember({"F", "rho", "r", "R", "Ru"}));
  build->add_option("--u", u_value, "spectral parameter for target Ru");
  build->add_option("--out", build_out, "output directory");

  auto* verify = app.add_subcommand(
      "verify", "run exact verification checks and write a report");
  ChainOptions verify_opts;
  add_chain_options(verify, &verify_opts);
  std::vector<std::string> checks;
  std::vector<std::string> samples;
  std::string report_out;
  verify->add_option("--check", checks,
                     "check to run: twist, cybe, qybe, spectral, lemma, "
                     "reference (repeatable; default: all applicable)")
      ->check(CLI::IsMember(
          {"twist", "cybe", "qybe", "spectral", "lemma", "reference"}));
  verify->add_option("--sample", samples,
                     "spectral sample \"u,v\" (repeatable; rational)");
  verify->add_option("--out", report_out, "report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (generators->parsed()) {
    return run_generators(gen_series, gen_rank, gen_out);
  }
  if (build->parsed()) {
    if (std::find(targets.begin(), targets.end(), "Ru") != targets.end() &&
        u_value.empty()) {
      std::cerr << "ytwist: target Ru requires --u\n";
      return kExitUsage;
    }
    return run_build(build_opts, targets, u_value, build_out);
  }
  return run_verify(verify_opts, checks, samples, report_out);
}
