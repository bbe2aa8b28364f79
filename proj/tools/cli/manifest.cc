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

#include "manifest.h"

#include <algorithm>

namespace peglab::cli {

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {
      "entropy", "extractor",     "gl",         "shadows",   "puzzle",
      "wpeg-gap", "core-lemma", "concentration", "efi-sweep", "commit-suite"};
  return names;
}

Manifest Manifest::parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("manifest is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

Manifest Manifest::from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("manifest must be a JSON object");
  static const std::set<std::string> known = {"subcommand", "params", "seed", "trials", "output"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw SchemaError("unknown manifest field '" + key + "'");
  }
  Manifest m;
  if (!j.contains("subcommand") || !j["subcommand"].is_string()) {
    throw SchemaError("manifest field 'subcommand' must be a string");
  }
  m.subcommand = j["subcommand"].get<std::string>();
  const auto& names = subcommands();
  if (std::find(names.begin(), names.end(), m.subcommand) == names.end()) {
    throw SchemaError("unknown subcommand '" + m.subcommand + "'");
  }
  if (!j.contains("seed") || !j["seed"].is_number_unsigned()) {
    throw SchemaError("manifest field 'seed' must be an unsigned 64-bit integer");
  }
  m.seed = j["seed"].get<uint64_t>();
  if (j.contains("trials")) {
    if (!j["trials"].is_number_unsigned() || j["trials"].get<uint64_t>() == 0) {
      throw SchemaError("manifest field 'trials' must be a positive integer");
    }
    m.trials = j["trials"].get<uint64_t>();
  }
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw SchemaError("manifest field 'params' must be an object");
    m.params = j["params"];
  }
  if (j.contains("output")) {
    if (!j["output"].is_string()) throw SchemaError("manifest field 'output' must be a string");
    m.output = j["output"].get<std::string>();
  }
  return m;
}

Json Manifest::to_json() const {
  Json j = {{"subcommand", subcommand}, {"params", params}, {"seed", seed}, {"trials", trials}};
  if (!output.empty()) j["output"] = output;
  return j;
}

Params::Params(const Json& block, std::initializer_list<const char*> allowed) : block_(block) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : block_.items()) {
    if (!ok.count(key)) throw SchemaError("unknown parameter '" + key + "'");
  }
}

uint64_t Params::get_uint(const char* key, uint64_t fallback) const {
  if (!has(key)) return fallback;
  const Json& v = block_[key];
  // Literals built in C++ arrive as signed integers; accept them when nonnegative.
  const bool ok = v.is_number_unsigned() || (v.is_number_integer() && v.get<int64_t>() >= 0);
  if (!ok) throw SchemaError(std::string("parameter '") + key + "' must be an unsigned integer");
  return v.get<uint64_t>();
}

double Params::get_double(const char* key, double fallback) const {
  if (!has(key)) return fallback;
  if (!block_[key].is_number()) throw SchemaError(std::string("parameter '") + key + "' must be a number");
  return block_[key].get<double>();
}

bool Params::get_bool(const char* key, bool fallback) const {
  if (!has(key)) return fallback;
  if (!block_[key].is_boolean()) throw SchemaError(std::string("parameter '") + key + "' must be a boolean");
  return block_[key].get<bool>();
}

std::string Params::get_string(const char* key, const std::string& fallback) const {
  if (!has(key)) return fallback;
  if (!block_[key].is_string()) throw SchemaError(std::string("parameter '") + key + "' must be a string");
  return block_[key].get<std::string>();
}

const Json& Params::get_object(const char* key) const {
  if (!block_[key].is_object()) throw SchemaError(std::string("parameter '") + key + "' must be an object");
  return block_[key];
}

}  // namespace peglab::cli
