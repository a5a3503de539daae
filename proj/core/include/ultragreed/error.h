// Copyright 2026 The ultragreed Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ULTRAGREED_ERROR_H_
#define ULTRAGREED_ERROR_H_

#include <stdexcept>
#include <string>

namespace ultragreed {

// Raised when an input violates a documented precondition (bad field
// parameters, an invalid triple, a field that is too small, ...). The CLI maps
// it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ultragreed

#endif  // ULTRAGREED_ERROR_H_
