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

// JSON export of carpet geometry, fields and forms. Rationals are written as
// [num, den] pairs.

#pragma once

#include <string>

#include "carpet/carpet.hpp"
#include "carpet/field.hpp"
#include "carpet/forms.hpp"

namespace carpet {

// Holes of stages 1..m as {stage, center: [num, den, num, den], side: [num, den]}.
std::string holes_json(const CarpetSpec& spec, int m);
std::string field_json(const ScalarField& f);
std::string vector_field_json(const VectorField& v);
std::string form_json(const OneForm& w);
std::string form_json(const TwoForm& x);

}  // namespace carpet
