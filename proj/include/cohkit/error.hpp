// Copyright 2026 The cohkit Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace cohkit {

enum class ErrorCode {
    InvalidArgument,
    NonSquare,
    NotHermitian,
    NonFinite,
    NotDensity,
    NotNormalized,
    DimensionMismatch,
    ConvergenceFailure,
    MaxIterationsExceeded,
    NotAWitness,
    WitnessExceedsIdentity,
    ParseError,
    IoError,
    EmptyInput,
    RangeError,
    DimensionTooLarge,
    DegenerateSpectrum,
    IntervalTooWide,
    NoSamples,
    Unbounded,
};

const char *to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the C
/// API maps them one-to-one onto cohkit_status values.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace cohkit
