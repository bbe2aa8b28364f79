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

#ifndef PEGLAB_TOOLS_CLI_COMMANDS_H_
#define PEGLAB_TOOLS_CLI_COMMANDS_H_

#include <string>
#include <vector>

#include "manifest.h"

namespace peglab::cli {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
};

struct Report {
  Json results = Json::object();
  Table table;
};

/// Dispatches on manifest.subcommand. Trials run on `workers` threads; per-trial
/// results are stored by index and aggregated in index order, so the report does
/// not depend on the worker count.
Report run(const Manifest& manifest, size_t workers);

/// Full JSON document: manifest, library version and results.
std::string render_report(const Manifest& manifest, const Report& report, const Json* timing);

}  // namespace peglab::cli

#endif  // PEGLAB_TOOLS_CLI_COMMANDS_H_
