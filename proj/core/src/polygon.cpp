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

#include "carpet/polygon.hpp"

#include <algorithm>

#include "carpet/error.hpp"

namespace carpet {

Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Rational signed_area(const std::vector<Point>& pts) {
  Rational twice = 0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % n];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / 2;
}

namespace {

void drop_duplicates(std::vector<Point>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (auto& p : pts) {
    if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  pts.swap(out);
}

void drop_collinear(std::vector<Point>& pts) {
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    const std::size_t n = pts.size();
    std::vector<Point> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point& prev = out.empty() ? pts[(i + n - 1) % n] : out.back();
      const Point& next = pts[(i + 1) % n];
      if (sgn(cross(prev, pts[i], next)) == 0) {
        changed = true;
        continue;
      }
      out.push_back(pts[i]);
    }
    pts.swap(out);
  }
}

void rotate_to_min(std::vector<Point>& pts) {
  auto it = std::min_element(pts.begin(), pts.end());
  std::rotate(pts.begin(), it, pts.end());
}

bool on_segment(const Point& p, const Point& q, const Point& r) {
  // r collinear with pq assumed
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

bool segments_meet(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  int d1 = sgn(cross(q1, q2, p1));
  int d2 = sgn(cross(q1, q2, p2));
  int d3 = sgn(cross(p1, p2, q1));
  int d4 = sgn(cross(p1, p2, q2));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

}  // namespace

bool is_simple(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = pts[(i + n - 1) % n];
    const Point& next = pts[(i + 1) % n];
    if (pts[i] == next) return false;
    // a spike doubles back along its own edge
    if (sgn(cross(prev, pts[i], next)) == 0) {
      Rational dot = (pts[i].x - prev.x) * (next.x - pts[i].x) + (pts[i].y - prev.y) * (next.y - pts[i].y);
      if (dot < 0) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_meet(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) return false;
    }
  }
  return true;
}

PolyRegion::PolyRegion(std::vector<Point> vertices) {
  drop_duplicates(vertices);
  if (vertices.size() < 3 || !is_simple(vertices)) {
    throw CarpetError(ErrorCode::NonSimplePolygon, "polygon is not simple");
  }
  drop_collinear(vertices);
  if (vertices.size() < 3) throw CarpetError(ErrorCode::NonSimplePolygon, "polygon has no area");
  if (signed_area(vertices) < 0) std::reverse(vertices.begin(), vertices.end());
  v_ = std::move(vertices);
  finish();
}

std::optional<PolyRegion> PolyRegion::from_convex(std::vector<Point> vertices) {
  drop_duplicates(vertices);
  drop_collinear(vertices);
  if (vertices.size() < 3) return std::nullopt;
  int s = sgn(signed_area(vertices));
  if (s == 0) return std::nullopt;
  if (s < 0) std::reverse(vertices.begin(), vertices.end());
  PolyRegion r;
  r.v_ = std::move(vertices);
  r.finish();
  return r;
}

PolyRegion PolyRegion::rectangle(const Rational& x0, const Rational& y0, const Rational& x1,
                                 const Rational& y1) {
  auto r = from_convex({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
  if (!r) throw CarpetError(ErrorCode::NonSimplePolygon, "degenerate rectangle");
  return *r;
}

void PolyRegion::finish() {
  rotate_to_min(v_);
  box_ = {v_[0].x, v_[0].y, v_[0].x, v_[0].y};
  convex_ = true;
  const std::size_t n = v_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = v_[i];
    if (p.x < box_.x0) box_.x0 = p.x;
    if (p.x > box_.x1) box_.x1 = p.x;
    if (p.y < box_.y0) box_.y0 = p.y;
    if (p.y > box_.y1) box_.y1 = p.y;
    if (sgn(cross(p, v_[(i + 1) % n], v_[(i + 2) % n])) < 0) convex_ = false;
  }
}

Rational PolyRegion::area() const { return signed_area(v_); }

Point PolyRegion::centroid() const {
  auto m = polygon_moments<Rational>(v_);
  return {m.m10 / m.m00, m.m01 / m.m00};
}

bool PolyRegion::contains(const Point& p) const {
  const std::size_t n = v_.size();
  if (convex_) {
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(cross(v_[i], v_[(i + 1) % n], p)) < 0) return false;
    }
    return true;
  }
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v_[i];
    const Point& b = v_[(i + 1) % n];
    if (sgn(cross(a, b, p)) == 0 && on_segment(a, b, p)) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      Rational xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xi) inside = !inside;
    }
  }
  return inside;
}

bool PolyRegion::inside_unit_square() const {
  return box_.x0 >= 0 && box_.y0 >= 0 && box_.x1 <= 1 && box_.y1 <= 1;
}

PolyRegion PolyRegion::translated(const Rational& dx, const Rational& dy) const {
  PolyRegion r;
  r.v_.reserve(v_.size());
  for (const auto& p : v_) r.v_.push_back({p.x + dx, p.y + dy});
  r.box_ = {box_.x0 + dx, box_.y0 + dy, box_.x1 + dx, box_.y1 + dy};
  r.convex_ = convex_;
  return r;
}

bool operator<(const PolyRegion& a, const PolyRegion& b) {
  if (a.v_.size() != b.v_.size()) return a.v_.size() < b.v_.size();
  for (std::size_t i = 0; i < a.v_.size(); ++i) {
    int c = cmp(a.v_[i].x, b.v_[i].x);
    if (c != 0) return c < 0;
    c = cmp(a.v_[i].y, b.v_[i].y);
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<Point> clip_halfplane(const std::vector<Point>& pts, const Rational& a,
                                  const Rational& b, const Rational& c) {
  std::vector<Point> out;
  const std::size_t n = pts.size();
  if (n == 0) return out;
  out.reserve(n + 2);
  std::vector<Rational> s(n);
  bool all_in = true;
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = a * pts[i].x + b * pts[i].y + c;
    if (sgn(s[i]) < 0) all_in = false;
  }
  if (all_in) return pts;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    bool in_i = sgn(s[i]) >= 0;
    bool in_j = sgn(s[j]) >= 0;
    if (in_i) out.push_back(pts[i]);
    if (in_i != in_j && sgn(s[i]) != 0 && sgn(s[j]) != 0) {
      Rational t = s[i] / (s[i] - s[j]);
      out.push_back({pts[i].x + t * (pts[j].x - pts[i].x), pts[i].y + t * (pts[j].y - pts[i].y)});
    }
  }
  return out;
}

std::optional<PolyRegion> intersect(const PolyRegion& a, const PolyRegion& b) {
  if (!a.bbox().overlaps(b.bbox())) return std::nullopt;
  // nested regions keep their canonical form, which the moment cache relies on
  if (a == b || (b.convex() && std::all_of(a.vertices().begin(), a.vertices().end(),
                                           [&](const Point& p) { return b.contains(p); }))) {
    return a;
  }
  if (a.convex() && std::all_of(b.vertices().begin(), b.vertices().end(),
                                [&](const Point& p) { return a.contains(p); })) {
    return b;
  }
  std::vector<Point> pts = a.vertices();
  const auto& e = b.vertices();
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n && pts.size() >= 3; ++i) {
    const Point& p = e[i];
    const Point& q = e[(i + 1) % n];
    Rational ca = p.y - q.y;
    Rational cb = q.x - p.x;
    Rational cc = -(ca * p.x + cb * p.y);
    pts = clip_halfplane(pts, ca, cb, cc);
  }
  if (pts.size() < 3) return std::nullopt;
  return PolyRegion::from_convex(std::move(pts));
}

std::vector<PolyRegion> convex_pieces(const PolyRegion& r) {
  if (r.convex()) return {r};
  std::vector<Point> poly = r.vertices();
  std::vector<PolyRegion> out;
  while (poly.size() > 3) {
    const std::size_t n = poly.size();
    bool clipped = false;
    for (std::size_t i = 0; i < n && !clipped; ++i) {
      const Point& a = poly[(i + n - 1) % n];
      const Point& b = poly[i];
      const Point& c = poly[(i + 1) % n];
      if (sgn(cross(a, b, c)) <= 0) continue;
      bool ear = true;
      for (std::size_t k = 0; k < n && ear; ++k) {
        if (k == i || k == (i + 1) % n || k == (i + n - 1) % n) continue;
        const Point& p = poly[k];
        if (sgn(cross(a, b, p)) >= 0 && sgn(cross(b, c, p)) >= 0 && sgn(cross(c, a, p)) >= 0) ear = false;
      }
      if (!ear) continue;
      if (auto t = PolyRegion::from_convex({a, b, c})) out.push_back(*t);
      poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
    }
    if (!clipped) throw CarpetError(ErrorCode::NonSimplePolygon, "ear clipping failed");
  }
  if (auto t = PolyRegion::from_convex(poly)) out.push_back(*t);
  return out;
}

template <class T>
Moments<T> polygon_moments(const std::vector<Point>& pts) {
  Moments<T> m;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % n];
    T x0 = coefficient<T>(p.x), y0 = coefficient<T>(p.y);
    T x1 = coefficient<T>(q.x), y1 = coefficient<T>(q.y);
    T c = x0 * y1 - x1 * y0;
    m.m00 += c;
    m.m10 += (x0 + x1) * c;
    m.m01 += (y0 + y1) * c;
    m.m20 += (x0 * x0 + x0 * x1 + x1 * x1) * c;
    m.m02 += (y0 * y0 + y0 * y1 + y1 * y1) * c;
    m.m11 += (x0 * y1 + 2 * x0 * y0 + 2 * x1 * y1 + x1 * y0) * c;
  }
  m.m00 /= 2;
  m.m10 /= 6;
  m.m01 /= 6;
  m.m20 /= 12;
  m.m02 /= 12;
  m.m11 /= 24;
  return m;
}

template Moments<Rational> polygon_moments<Rational>(const std::vector<Point>&);
template Moments<double> polygon_moments<double>(const std::vector<Point>&);

}  // namespace carpet
