// Copyright 2026 The carpetcurl Authors.
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

#include "carpet/error.hpp"

namespace carpet {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonOddReciprocal: return "NonOddReciprocal";
    case ErrorCode::RatioOutOfRange: return "RatioOutOfRange";
    case ErrorCode::StageBeyondSpec: return "StageBeyondSpec";
    case ErrorCode::NonSimplePolygon: return "NonSimplePolygon";
    case ErrorCode::OutOfUnitSquare: return "OutOfUnitSquare";
    case ErrorCode::TailDiverges: return "TailDiverges";
    case ErrorCode::IncompatiblePartitions: return "IncompatiblePartitions";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::LocalConstancyViolated: return "LocalConstancyViolated";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

CarpetError::CarpetError(ErrorCode code, std::string message, long index)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      index_(index) {}

}  // namespace carpet
