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

#ifndef PEGLAB_TOOLS_CLI_MANIFEST_H_
#define PEGLAB_TOOLS_CLI_MANIFEST_H_

#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace peglab::cli {

using Json = nlohmann::json;

/// Manifest or parameter block does not match the published schema (exit 2).
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

const std::vector<std::string>& subcommands();

struct Manifest {
  std::string subcommand;
  Json params = Json::object();
  uint64_t seed = 0;
  uint64_t trials = 1;
  std::string output;

  static Manifest parse(const std::string& text);
  static Manifest from_json(const Json& j);
  Json to_json() const;
};

/// Typed read access to a parameter block; unknown keys are rejected up front.
class Params {
 public:
  Params(const Json& block, std::initializer_list<const char*> allowed);

  bool has(const char* key) const { return block_.contains(key); }
  uint64_t get_uint(const char* key, uint64_t fallback) const;
  double get_double(const char* key, double fallback) const;
  bool get_bool(const char* key, bool fallback) const;
  std::string get_string(const char* key, const std::string& fallback) const;
  const Json& get_object(const char* key) const;

 private:
  const Json& block_;
};

}  // namespace peglab::cli

#endif  // PEGLAB_TOOLS_CLI_MANIFEST_H_
