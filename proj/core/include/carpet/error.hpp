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

#pragma once

#include <stdexcept>
#include <string>

namespace carpet {

enum class ErrorCode {
  NonOddReciprocal,
  RatioOutOfRange,
  StageBeyondSpec,
  NonSimplePolygon,
  OutOfUnitSquare,
  TailDiverges,
  IncompatiblePartitions,
  SupportMismatch,
  LocalConstancyViolated,
  DegreeOverflow,
  InvalidArgument,
  ConfigError,
};

const char* error_name(ErrorCode code);

// `index` carries the 1-based ratio index, stage or cell the error refers to
// (or -1 when not applicable).
class CarpetError : public std::runtime_error {
 public:
  CarpetError(ErrorCode code, std::string message, long index = -1);

  ErrorCode code() const noexcept { return code_; }
  long index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  long index_;
};

}  // namespace carpet
