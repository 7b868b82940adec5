// Copyright 2026 The Guesswork Authors
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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace guesswork {

enum class ErrorCode {
    DuplicateLabel,
    BlochNormExceeded,
    LengthMismatch,
    TooFewStates,
    InvalidPrior,
    InvalidNumbering,
    InvalidMeasurement,
    NotCentrallySymmetric,
    ParseError,
    ValidationError,
    NotBalanced,
    AlphabetMismatch,
    CapExceeded,
    NegativeProbability,
    EffectSumMismatch,
    RegimeUnavailable,
    UnsupportedSize,
    UnknownFamily,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code. Wrapping errors (for example a
/// ValidationError raised while loading a file) keep the original code in
/// `cause()`.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what,
          std::optional<ErrorCode> cause = std::nullopt)
        : std::runtime_error(what), code_(code), cause_(cause) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] std::optional<ErrorCode> cause() const noexcept {
        return cause_;
    }

  private:
    ErrorCode code_;
    std::optional<ErrorCode> cause_;
};

} // namespace guesswork
