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

// Writes the built-in tabulated puzzles as canonical JointPmf JSON, one file each.

#include <fstream>
#include <iostream>
#include <string>

#include "peglab/dist.h"
#include "peglab/puzzles.h"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: peglab_fixtures OUTPUT_DIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  for (const auto& p : peglab::tabulated_puzzles()) {
    const std::string path = dir + "/" + p.name + ".json";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    out << peglab::to_json(*p.exact_joint) << "\n";
  }
  return 0;
}
