// Copyright 2026 The dsrg-circulant Authors
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

#ifndef DSRG_ERROR_H_
#define DSRG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsrg {

enum class ErrorCode {
  kNotCirculant,
  kBadDimension,
  kDimensionMismatch,
  kModulusMismatch,
  kInvalidParams,
  kNegativeParameter,
  kTooLarge,
  kIndivisibleParameters,
  kInvalidBorder,
  kInfeasibleEntry,
  kCheckpointCorrupt,
  kNoZ3Structure,
  kIllegalFloorInterior,
  kNotShiftInvariant,
  kCertificateOracleDisagreement,
  kParseError,
  kIoError,
  // A result failed its own postcondition check.
  kInternalConsistency,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code), message_(message) {}

  ErrorCode code() const { return code_; }
  // Without the code name prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace dsrg

#endif  // DSRG_ERROR_H_
