// Copyright 2026 The dps authors
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

#ifndef DPS_ERROR_HPP
#define DPS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dps {

enum class ErrorCode {
    invalid_argument,   // malformed configuration or input shape
    spec_mismatch,      // operands belong to different fields
    division_by_zero,
    precondition,       // documented operation precondition violated
    not_clifford,       // conjugation image is not a translation operator
    validation,         // numerical validation failed (non-density input, ...)
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace dps

#endif
