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

#include <cstdint>
#include <memory>
#include <vector>

#include "carpet/carpet.hpp"
#include "carpet/polygon.hpp"
#include "carpet/value.hpp"

namespace carpet {

namespace detail {
struct MomentCache;
}

// S_{a,m}, never materialized. Integrals descend the subdivision only where
// a square crosses the region boundary.
class Prefractal {
 public:
  Prefractal(CarpetSpec spec, int level, Arithmetic mode = Arithmetic::exact);

  const CarpetSpec& spec() const { return spec_; }
  int level() const { return level_; }
  Arithmetic arithmetic() const { return mode_; }

  // lambda^2(S_{a,m})
  const Rational& measure() const { return tail_[0]; }
  const Rational& side(int k) const { return side_[k]; }

  bool contains(const Point& p) const;

  // lambda^2(S_{a,m} ∩ region) for a simple polygon inside [0,1]^2.
  // Errors: OutOfUnitSquare.
  Value region_measure(const PolyRegion& region) const;

  // Moments of S_{a,m} ∩ region; region must be convex.
  Moments<Rational> moments(const PolyRegion& convex) const;
  Moments<double> moments_f64(const PolyRegion& convex) const;

  // Integral of a degree <= 2 polynomial over S_{a,m} ∩ region (convex), in
  // the prefractal's arithmetic.
  Value integrate(const Poly2& integrand, const PolyRegion& convex) const;

  std::size_t cached_regions() const;

 private:
  template <class T>
  Moments<T> compute(const PolyRegion& convex) const;

  CarpetSpec spec_;
  int level_;
  Arithmetic mode_;
  std::vector<Rational> side_;   // delta_k
  std::vector<long> split_;      // 1/a_k, index k >= 1
  std::vector<Rational> tail_;   // prod_{i>k}^{m} (1 - a_i^2)
  std::vector<Rational> spread_; // normalized centered second moment of a level-k square
  std::shared_ptr<detail::MomentCache> cache_;
};

}  // namespace carpet
