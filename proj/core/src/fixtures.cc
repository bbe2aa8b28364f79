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

#include "peglab/fixtures.h"

#include <vector>

namespace peglab {

CoreLemmaFixture core_lemma_fixture() {
  CoreLemmaFixture f;
  std::vector<double> probs(64, 0.7 / 63);
  probs[0] = 0.3;
  f.x = Pmf::from_probabilities(probs, 6);
  f.x_star = BitVec::from_uint(0, 6);
  return f;
}

Pmf efi_product_fixture() { return product_power(Pmf::from_probabilities({0.4, 0.3, 0.3}, 2), 6); }

}  // namespace peglab
