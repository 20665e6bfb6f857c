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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "carpet/carpet.hpp"
#include "carpet/field.hpp"
#include "carpet/report.hpp"

namespace carpet {

struct Strip {
  Rational y_center;
  Rational height;
  PolyRegion region;
};

// Full-width horizontal strips of height delta_n around the stage-n y-cuts.
struct StripSet {
  int stage = 0;
  Rational height;
  std::vector<Strip> strips;
  Rational area() const;
};

StripSet build_Fn(const CarpetSpec& spec, int n);

// Piecewise linear in y on full-width bands: slope 0 on strips, 1 elsewhere,
// phi_n(x, 0) = 0.
ScalarField build_phi_n(const CarpetSpec& spec, int n);

enum class TentKind { full, lower_half, upper_half };

const char* tent_kind_name(TentKind k);

// The tent on the vertical cut x = c_column between hole row band-1 (below)
// and hole row band (above). Half tents are the part that exists when one of
// the two holes is missing (unit-square edge or a larger hole).
struct Tent {
  std::int64_t column = 0;
  std::int64_t band = 0;
  TentKind kind = TentKind::full;
  PolyRegion rectangle;
  PolyRegion trapezoid;
  std::vector<Patch> patches;  // psi_n on the rectangle

  // Lebesgue energy of psi_n over the rectangle.
  Rational energy() const;
};

std::vector<Tent> build_tents(const CarpetSpec& spec, int n);

// (3/4) eps delta + 4 eps^3 / delta, the exact energy of one full tent.
Rational full_tent_energy(const CarpetSpec& spec, int n);
// (3/4) eps delta + 8 eps^3 / delta.
Rational tent_energy_bound(const CarpetSpec& spec, int n);
// (3/2)(1 - a_n) delta_n + 16 (1 - a_n)^3 delta_{n-1} / a_n.
Rational psi_energy_bound(const CarpetSpec& spec, int n);
// Full tents count 1, half tents 1/2.
Rational full_tent_equivalents(const std::vector<Tent>& tents);

// Supported on the stage-n squares S_{a,n}; zero off the tents.
ScalarField build_psi_n(const CarpetSpec& spec, int n);

enum class NeighborhoodPiece { bottom_strip, top_strip, left_trapezoid, right_trapezoid };

const char* neighborhood_piece_name(NeighborhoodPiece p);

// U_{n,k}: strip segments along the horizontal edges of cell k and tent
// trapezoid halves along its vertical edges.
struct BoundaryNeighborhood {
  std::size_t cell = 0;
  std::vector<std::pair<NeighborhoodPiece, PolyRegion>> pieces;
};

struct GnResult {
  ScalarField field;
  std::vector<BoundaryNeighborhood> neighborhoods;
};

// g_n = phi_n - psi_n. Errors: LocalConstancyViolated(k).
GnResult build_g_n(const CarpetSpec& spec, int n);

// Cells k with a patch of g meeting U_{n,k} in positive area where grad g != 0.
std::vector<std::size_t> constancy_violations(const ScalarField& g,
                                              const std::vector<BoundaryNeighborhood>& neighborhoods);

// Per-cell affine map A_k; gets the cell index and center.
using CellMap = std::function<Poly2(std::size_t, const Point&)>;

// Continuous field equal to A_k on the core of cell k (cell minus U_{n,k}),
// interpolated linearly to 0 on the cut lines across each U piece. Supported
// on S_{a,n}.
ScalarField build_cell_cutoff(const CarpetSpec& spec, int n, const CellMap& map);

// Piecewise constant A_k on the whole of cell k ∩ S_{a,n}, no cutoff.
ScalarField build_cell_constant(const CarpetSpec& spec, int n, const std::function<Rational(std::size_t, const Point&)>& map);

// h_n = f(center_k) (x - center_k.x) on cell cores.
ScalarField build_h_n(const CarpetSpec& spec, int n, const ScalarField& f);

// v_n = h_n grad g_n.
VectorField build_v_n(const CarpetSpec& spec, int n, const ScalarField& f);

// Rows for n = 1..n_max on S_{a,m}; failures are carried in the report.
VerificationReport verify_theorem1(const CarpetSpec& spec, const ScalarField& f, int n_max, int m,
                                   Arithmetic mode = Arithmetic::exact);

}  // namespace carpet
