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
#include <vector>

#include "carpet/polygon.hpp"
#include "carpet/polynomial.hpp"
#include "carpet/prefractal.hpp"
#include "carpet/value.hpp"

namespace carpet {

struct Patch {
  PolyRegion region;
  Poly2 value;
};

// Scalar field on a polygonal partition of its support. Patches are convex;
// nonconvex input regions are split on construction. Values are affine in
// every field the counterexample builds; degree 2 appears only for products.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(std::vector<Patch> patches);
  static ScalarField on_unit_square(const Poly2& value);

  const std::vector<Patch>& patches() const { return patches_; }
  std::size_t size() const { return patches_.size(); }
  int degree() const;
  bool is_affine() const { return degree() <= 1; }
  Rational support_area() const;
  std::vector<PolyRegion> regions() const;

  // Set by builders once continuity has been checked.
  bool continuous = false;

 private:
  std::vector<Patch> patches_;
};

struct VectorPatch {
  PolyRegion region;
  Poly2 u1;
  Poly2 u2;
};

class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<VectorPatch> patches);

  const std::vector<VectorPatch>& patches() const { return patches_; }
  std::size_t size() const { return patches_.size(); }
  std::vector<PolyRegion> regions() const;
  ScalarField component(int i) const;  // i = 1 or 2

 private:
  std::vector<VectorPatch> patches_;
};

// One cell of a common refinement, with the index of the source patch in
// every input partition.
struct RefinedCell {
  PolyRegion region;
  std::vector<std::size_t> source;
};

// Pairwise convex intersections, empty ones dropped. Supports may be nested:
// the refinement must cover the smaller of the two supports exactly, or
// SupportMismatch is thrown.
std::vector<RefinedCell> overlay(const std::vector<PolyRegion>& a, const std::vector<PolyRegion>& b);
std::vector<RefinedCell> overlay(const std::vector<std::vector<PolyRegion>>& partitions);

VectorField gradient(const ScalarField& f);
// d u2/dx - d u1/dy patchwise.
ScalarField curl(const VectorField& v);

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const Rational& s, const ScalarField& f);
ScalarField product(const ScalarField& a, const ScalarField& b);
// h * w componentwise on the common refinement.
VectorField product(const ScalarField& h, const VectorField& w);
ScalarField dot(const VectorField& a, const VectorField& b);
// Restrict a field to a partition nested inside its support.
ScalarField refine(const ScalarField& f, const std::vector<PolyRegion>& partition);

// Integral of f over S_{a,m} ∩ support(f).
Value integral(const ScalarField& f, const Prefractal& pf);
Value dirichlet_energy(const ScalarField& f, const Prefractal& pf);
Value l2_norm_sq(const ScalarField& f, const Prefractal& pf);
Value l2_norm_sq(const VectorField& v, const Prefractal& pf);

// Max |f| over patch vertices; affine fields only.
Rational sup_norm(const ScalarField& f);

// Values agree along every shared edge segment (endpoints, plus midpoint for
// quadratic patches).
bool is_continuous(const ScalarField& f);

// Value at a point of the support; the first patch containing the point wins.
std::optional<Rational> evaluate(const ScalarField& f, const Point& p);

}  // namespace carpet
