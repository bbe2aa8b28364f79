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

#ifndef PEGLAB_FIXTURES_H_
#define PEGLAB_FIXTURES_H_

#include "peglab/bitvec.h"
#include "peglab/dist.h"

namespace peglab {

/// Heavy/light instance over {0,1}^6: x* = 000000 with mass 0.3, the other 63
/// strings share 0.7 evenly (about 0.0111 each).
struct CoreLemmaFixture {
  Pmf x;
  BitVec x_star;
  double theta_heavy = 0.3;
  double theta_light = 0.012;
};

CoreLemmaFixture core_lemma_fixture();

/// Six-fold product of {0.4, 0.3, 0.3} on 2-bit labels: 729 atoms of 12 bits.
Pmf efi_product_fixture();

inline constexpr double kEfiProductEps = 0.01;
inline constexpr double kEfiProductMargin = 6;

}  // namespace peglab

#endif  // PEGLAB_FIXTURES_H_
