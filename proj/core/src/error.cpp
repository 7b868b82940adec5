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

#include "guesswork/error.hpp"

namespace guesswork {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::BlochNormExceeded: return "BlochNormExceeded";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooFewStates: return "TooFewStates";
    case ErrorCode::InvalidPrior: return "InvalidPrior";
    case ErrorCode::InvalidNumbering: return "InvalidNumbering";
    case ErrorCode::InvalidMeasurement: return "InvalidMeasurement";
    case ErrorCode::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::EffectSumMismatch: return "EffectSumMismatch";
    case ErrorCode::RegimeUnavailable: return "RegimeUnavailable";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace guesswork
