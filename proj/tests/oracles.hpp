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

// Brute-force references: explicit square lists instead of the implicit
// recursion used by the library.

#pragma once

#include <algorithm>
#include <vector>

#include "carpet/carpet.hpp"
#include "carpet/polygon.hpp"
#include "carpet/polynomial.hpp"

namespace oracle {

using carpet::Box;
using carpet::Rational;

inline std::vector<Box> squares(const std::vector<Rational>& ratios, int m) {
  std::vector<Box> level{{Rational(0), Rational(0), Rational(1), Rational(1)}};
  for (int i = 0; i < m; ++i) {
    Rational inv = 1 / ratios[i];
    long p = inv.get_num().get_si();
    std::vector<Box> next;
    for (const auto& b : level) {
      Rational s = (b.x1 - b.x0) / p;
      for (long v = 0; v < p; ++v) {
        for (long u = 0; u < p; ++u) {
          if (2 * u + 1 == p && 2 * v + 1 == p) continue;
          Rational x = b.x0 + u * s;
          Rational y = b.y0 + v * s;
          next.push_back({x, y, x + s, y + s});
        }
      }
    }
    level.swap(next);
  }
  return level;
}

inline Rational rect_measure(const std::vector<Box>& sq, const Box& r) {
  Rational total = 0;
  for (const auto& b : sq) {
    Rational w = std::min(b.x1, r.x1) - std::max(b.x0, r.x0);
    Rational h = std::min(b.y1, r.y1) - std::max(b.y0, r.y0);
    if (w > 0 && h > 0) total += w * h;
  }
  return total;
}

inline carpet::Moments<Rational> moments(const std::vector<Box>& sq, const carpet::PolyRegion& poly) {
  carpet::Moments<Rational> total;
  for (const auto& b : sq) {
    auto cell = carpet::PolyRegion::rectangle(b.x0, b.y0, b.x1, b.y1);
    if (auto piece = carpet::intersect(cell, poly)) {
      total += carpet::polygon_moments<Rational>(piece->vertices());
    }
  }
  return total;
}

// Integral of a polynomial over the explicit squares intersected with a
// convex region.
inline Rational integral(const std::vector<Box>& sq, const carpet::PolyRegion& poly, const carpet::Poly2& p) {
  const Box& bb = poly.bbox();
  Rational total = 0;
  for (const auto& b : sq) {
    if (b.x1 <= bb.x0 || b.x0 >= bb.x1 || b.y1 <= bb.y0 || b.y0 >= bb.y1) continue;
    auto cell = carpet::PolyRegion::rectangle(b.x0, b.y0, b.x1, b.y1);
    if (auto piece = carpet::intersect(cell, poly)) {
      total += carpet::integrate(p, carpet::polygon_moments<Rational>(piece->vertices()));
    }
  }
  return total;
}

}  // namespace oracle
