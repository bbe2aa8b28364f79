// Copyright 2026 The peglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "commands.h"
#include "manifest.h"
#include "peglab/errors.h"

namespace {

using peglab::cli::Json;

int fail(int code, const std::string& kind, const std::string& message) {
  Json err = {{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
  std::cerr << err.dump() << "\n";
  return code;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"peglab experiment runner"};
  std::string manifest_path;
  std::string subcommand;
  std::string params_text;
  std::optional<uint64_t> seed;
  std::optional<uint64_t> trials;
  std::optional<std::string> out;
  size_t workers = 1;
  std::string format = "json";
  bool timing = false;

  app.add_option("subcommand", subcommand, "Subcommand when no manifest is given");
  app.add_option("--manifest", manifest_path, "Experiment manifest (JSON)");
  app.add_option("--params", params_text, "Parameter block as inline JSON");
  app.add_option("--seed", seed, "Override the manifest seed");
  app.add_option("--trials", trials, "Override the trial count");
  app.add_option("--out", out, "Report path; '-' or empty writes to stdout");
  app.add_option("--workers", workers, "Worker threads for trial execution")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--timing", timing, "Embed wall-clock time (reports are then no longer reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "usage", e.what());
  }

  peglab::cli::Manifest manifest;
  try {
    Json j = Json::object();
    if (!manifest_path.empty()) {
      std::ifstream in(manifest_path, std::ios::binary);
      if (!in) return fail(2, "schema", "cannot read manifest '" + manifest_path + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        j = Json::parse(ss.str());
      } catch (const Json::parse_error& e) {
        return fail(2, "schema", std::string("manifest is not valid JSON: ") + e.what());
      }
      if (!j.is_object()) return fail(2, "schema", "manifest must be a JSON object");
    }
    if (!subcommand.empty()) j["subcommand"] = subcommand;
    if (!params_text.empty()) {
      try {
        j["params"] = Json::parse(params_text);
      } catch (const Json::parse_error& e) {
        return fail(2, "schema", std::string("--params is not valid JSON: ") + e.what());
      }
    }
    if (seed) j["seed"] = *seed;
    if (trials) j["trials"] = *trials;
    if (out) j["output"] = *out;
    if (!j.contains("seed")) j["seed"] = uint64_t{0};
    manifest = peglab::cli::Manifest::from_json(j);
  } catch (const peglab::cli::SchemaError& e) {
    return fail(2, "schema", e.what());
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const peglab::cli::Report report = peglab::cli::run(manifest, workers);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Json wall = {{"wall_clock_seconds", seconds}};
    std::string text;
    if (format == "csv") {
      if (report.table.header.empty()) return fail(2, "schema", manifest.subcommand + " has no tabular output");
      text = report.table.to_csv();
    } else {
      text = peglab::cli::render_report(manifest, report, timing ? &wall : nullptr);
    }
    write_output(manifest.output, text);
  } catch (const peglab::cli::SchemaError& e) {
    return fail(2, "schema", e.what());
  } catch (const peglab::ParameterRejected& e) {
    return fail(3, "parameter_rejected", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(3, "invalid_argument", e.what());
  } catch (const std::domain_error& e) {
    return fail(3, "parameter_rejected", e.what());
  } catch (const std::out_of_range& e) {
    return fail(3, "invalid_argument", e.what());
  } catch (const std::exception& e) {
    return fail(4, "internal", e.what());
  }
  return 0;
}
