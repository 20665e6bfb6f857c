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

// SVG renderings of the carpet and the stage-n construction. Coordinates are
// scaled by 1000, printed with 12 decimals, y pointing up.

#pragma once

#include <string>

#include "carpet/carpet.hpp"

namespace carpet {

std::string svg_carpet(const CarpetSpec& spec, int m);
// Cells S_{n,k} with dashed cut lines.
std::string svg_cells(const CarpetSpec& spec, int n);
// Profile of phi_n in y, strips shaded.
std::string svg_phi(const CarpetSpec& spec, int n);
// Tent rectangles and trapezoids over S_{a,n}.
std::string svg_psi(const CarpetSpec& spec, int n);
// Neighborhoods U_{n,k} over the cell grid.
std::string svg_unk(const CarpetSpec& spec, int n);

}  // namespace carpet
