/* Copyright 2026 The Spectrum Auction Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SPECTRUM_ERROR_HPP_
#define SPECTRUM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace spectrum {

enum class ErrorCode {
  kInvalidParameter,
  kDivisionDegenerate,
  kNoFeasibleDemand,
  kInvariantViolation,
  kOracleSize,
  kStructural,
  kConfig,
  kIo,
};

// Stable, machine-readable name, e.g. "invalid-parameter".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spectrum

#endif  // SPECTRUM_ERROR_HPP_
