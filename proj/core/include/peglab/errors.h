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

#ifndef PEGLAB_ERRORS_H_
#define PEGLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace peglab {

/// A well-formed parameter set that the construction cannot honor (for example a
/// slice index i_s above i_max). Malformed inputs throw std::invalid_argument.
class ParameterRejected : public std::domain_error {
 public:
  explicit ParameterRejected(const std::string& what) : std::domain_error(what) {}
};

/// A probability event was too unlikely to condition on.
class ZeroProbabilityEvent : public std::domain_error {
 public:
  explicit ZeroProbabilityEvent(const std::string& what) : std::domain_error(what) {}
};

}  // namespace peglab

#endif  // PEGLAB_ERRORS_H_
