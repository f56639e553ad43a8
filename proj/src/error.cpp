// Copyright 2026 The uqcr Authors
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

#include "uqcr/error.hpp"

namespace uqcr {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::SumMismatch: return "SumMismatch";
    case ErrorKind::TotalMismatch: return "TotalMismatch";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::SupportMismatch: return "SupportMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotRankOne: return "NotRankOne";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::BlochNormExceeded: return "BlochNormExceeded";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::SolverDiverged: return "SolverDiverged";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace uqcr
