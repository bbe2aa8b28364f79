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

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "peglab/dist.h"
#include "peglab/version.h"

namespace peglab {

namespace {

using nlohmann::json;

std::string decimal(double p) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", p);
  return buf;
}

double parse_decimal(const json& v) {
  if (!v.is_string()) throw std::invalid_argument("probabilities must be decimal strings");
  const std::string s = v.get<std::string>();
  char* end = nullptr;
  double p = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw std::invalid_argument("malformed probability: " + s);
  return p;
}

json parse_object(std::string_view text, const char* type) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("type", "") != type || !doc.contains("atoms") ||
      !doc["atoms"].is_array()) {
    throw std::invalid_argument(std::string("expected a ") + type + " document");
  }
  return doc;
}

}  // namespace

const char* version() { return PEGLAB_VERSION_STRING; }

std::string to_json(const Pmf& p) {
  json atoms = json::array();
  for (const auto& [x, q] : p.atoms()) atoms.push_back({{"x", x.to_hex()}, {"p", decimal(q)}});
  json doc = {{"type", "pmf"}, {"subnormalized", p.subnormalized()}, {"atoms", atoms}};
  return doc.dump();
}

std::string to_json(const JointPmf& j) {
  json atoms = json::array();
  for (const auto& a : j.atoms()) {
    atoms.push_back({{"k", a.key.to_hex()}, {"s", a.puzzle.to_hex()}, {"p", decimal(a.p)}});
  }
  json doc = {{"type", "joint_pmf"}, {"atoms", atoms}};
  return doc.dump();
}

Pmf pmf_from_json(std::string_view text) {
  json doc = parse_object(text, "pmf");
  std::vector<Pmf::Atom> atoms;
  for (const auto& a : doc["atoms"]) {
    if (!a.is_object() || !a.contains("x") || !a["x"].is_string() || !a.contains("p")) {
      throw std::invalid_argument("pmf atoms need string fields x and p");
    }
    atoms.emplace_back(BitVec::from_hex(a["x"].get<std::string>()), parse_decimal(a["p"]));
  }
  return Pmf::from_atoms(std::move(atoms), doc.value("subnormalized", false));
}

JointPmf joint_pmf_from_json(std::string_view text) {
  json doc = parse_object(text, "joint_pmf");
  std::vector<JointPmf::Atom> atoms;
  for (const auto& a : doc["atoms"]) {
    if (!a.is_object() || !a.contains("k") || !a.contains("s") || !a.contains("p") ||
        !a["k"].is_string() || !a["s"].is_string()) {
      throw std::invalid_argument("joint_pmf atoms need string fields k, s and p");
    }
    atoms.push_back({BitVec::from_hex(a["k"].get<std::string>()),
                     BitVec::from_hex(a["s"].get<std::string>()), parse_decimal(a["p"])});
  }
  return JointPmf::from_atoms(std::move(atoms));
}

}  // namespace peglab
