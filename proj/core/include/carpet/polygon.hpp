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

#include <optional>
#include <vector>

#include "carpet/polynomial.hpp"
#include "carpet/rational.hpp"

namespace carpet {

struct Point {
  Rational x;
  Rational y;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
inline bool operator<(const Point& a, const Point& b) {
  int c = cmp(a.x, b.x);
  return c < 0 || (c == 0 && a.y < b.y);
}

// (b - a) x (c - a)
Rational cross(const Point& a, const Point& b, const Point& c);

struct Box {
  Rational x0, y0, x1, y1;
  bool overlaps(const Box& o) const {
    return x0 < o.x1 && o.x0 < x1 && y0 < o.y1 && o.y0 < y1;
  }
};

// Integrals of 1, x, y, x^2, xy, y^2 over a region.
template <class T>
struct Moments {
  T m00{}, m10{}, m01{}, m20{}, m11{}, m02{};

  Moments& operator+=(const Moments& o) {
    m00 += o.m00; m10 += o.m10; m01 += o.m01;
    m20 += o.m20; m11 += o.m11; m02 += o.m02;
    return *this;
  }
  // Moments of the region shifted by (tx, ty).
  Moments translated(const T& tx, const T& ty) const {
    Moments r;
    r.m00 = m00;
    r.m10 = m10 + tx * m00;
    r.m01 = m01 + ty * m00;
    r.m20 = m20 + 2 * tx * m10 + tx * tx * m00;
    r.m11 = m11 + tx * m01 + ty * m10 + tx * ty * m00;
    r.m02 = m02 + 2 * ty * m01 + ty * ty * m00;
    return r;
  }
};

template <class T>
T coefficient(const Rational& q);
template <>
inline Rational coefficient<Rational>(const Rational& q) { return q; }
template <>
inline double coefficient<double>(const Rational& q) { return q.get_d(); }

template <class T>
T integrate(const Poly2& p, const Moments<T>& m) {
  T out = coefficient<T>(p[0]) * m.m00;
  if (p[1] != 0) out += coefficient<T>(p[1]) * m.m10;
  if (p[2] != 0) out += coefficient<T>(p[2]) * m.m01;
  if (p[3] != 0) out += coefficient<T>(p[3]) * m.m20;
  if (p[4] != 0) out += coefficient<T>(p[4]) * m.m11;
  if (p[5] != 0) out += coefficient<T>(p[5]) * m.m02;
  return out;
}

// Simple polygon with rational vertices in canonical form: counterclockwise,
// no repeated or collinear vertices, starting at the lexicographically
// smallest vertex. Equal regions given as convex polygons compare equal.
class PolyRegion {
 public:
  // Throws NonSimplePolygon for fewer than three distinct corners, zero area
  // or self-intersection.
  explicit PolyRegion(std::vector<Point> vertices);
  static PolyRegion rectangle(const Rational& x0, const Rational& y0, const Rational& x1,
                              const Rational& y1);
  // nullopt when the vertices enclose no area. Input must be a convex cycle.
  static std::optional<PolyRegion> from_convex(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  bool convex() const { return convex_; }
  const Box& bbox() const { return box_; }
  Rational area() const;
  Point centroid() const;
  bool contains(const Point& p) const;  // closed; convex regions only
  bool inside_unit_square() const;
  PolyRegion translated(const Rational& dx, const Rational& dy) const;

  friend bool operator==(const PolyRegion& a, const PolyRegion& b) { return a.v_ == b.v_; }
  friend bool operator<(const PolyRegion& a, const PolyRegion& b);

 private:
  PolyRegion() = default;
  void finish();

  std::vector<Point> v_;
  Box box_;
  bool convex_ = true;
};

// Area with sign (positive for counterclockwise order).
Rational signed_area(const std::vector<Point>& pts);

bool is_simple(const std::vector<Point>& pts);

// Convex intersection of two convex regions; nullopt when the overlap has
// zero area.
std::optional<PolyRegion> intersect(const PolyRegion& a, const PolyRegion& b);

// Keeps the part with a*x + b*y + c >= 0.
std::vector<Point> clip_halfplane(const std::vector<Point>& pts, const Rational& a,
                                  const Rational& b, const Rational& c);

// Triangulation by ear clipping for nonconvex regions; convex regions are
// returned unchanged.
std::vector<PolyRegion> convex_pieces(const PolyRegion& r);

// Edge-walk (Green's theorem) moments of a counterclockwise polygon.
template <class T>
Moments<T> polygon_moments(const std::vector<Point>& pts);

extern template Moments<Rational> polygon_moments<Rational>(const std::vector<Point>&);
extern template Moments<double> polygon_moments<double>(const std::vector<Point>&);

}  // namespace carpet
