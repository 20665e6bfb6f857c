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

#include "carpet/field.hpp"

#include <algorithm>
#include <cmath>

#include "carpet/error.hpp"
#include "carpet/spatial.hpp"

namespace carpet {

namespace {

Rational total_area(const std::vector<PolyRegion>& rs) {
  Rational a = 0;
  for (const auto& r : rs) a += r.area();
  return a;
}

bool same_partition(const std::vector<PolyRegion>& a, const std::vector<PolyRegion>& b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

template <class Term>
Value sum_patches(const Prefractal& pf, std::size_t n, Term&& term) {
  if (pf.arithmetic() == Arithmetic::exact) {
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) total += term(i).rational();
    return Value(total);
  }
  std::vector<double> parts;
  parts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) parts.push_back(term(i).to_double());
  return Value(pairwise_sum(parts));
}

}  // namespace

ScalarField::ScalarField(std::vector<Patch> patches) {
  patches_.reserve(patches.size());
  for (auto& p : patches) {
    if (p.region.convex()) {
      patches_.push_back(std::move(p));
    } else {
      for (auto& piece : convex_pieces(p.region)) patches_.push_back({std::move(piece), p.value});
    }
  }
}

ScalarField ScalarField::on_unit_square(const Poly2& value) {
  ScalarField f({{PolyRegion::rectangle(0, 0, 1, 1), value}});
  f.continuous = true;
  return f;
}

int ScalarField::degree() const {
  int d = -1;
  for (const auto& p : patches_) d = std::max(d, p.value.degree());
  return d;
}

Rational ScalarField::support_area() const {
  Rational a = 0;
  for (const auto& p : patches_) a += p.region.area();
  return a;
}

std::vector<PolyRegion> ScalarField::regions() const {
  std::vector<PolyRegion> out;
  out.reserve(patches_.size());
  for (const auto& p : patches_) out.push_back(p.region);
  return out;
}

VectorField::VectorField(std::vector<VectorPatch> patches) {
  patches_.reserve(patches.size());
  for (auto& p : patches) {
    if (p.region.convex()) {
      patches_.push_back(std::move(p));
    } else {
      for (auto& piece : convex_pieces(p.region)) patches_.push_back({std::move(piece), p.u1, p.u2});
    }
  }
}

std::vector<PolyRegion> VectorField::regions() const {
  std::vector<PolyRegion> out;
  out.reserve(patches_.size());
  for (const auto& p : patches_) out.push_back(p.region);
  return out;
}

ScalarField VectorField::component(int i) const {
  if (i != 1 && i != 2) throw CarpetError(ErrorCode::InvalidArgument, "component is 1 or 2", i);
  std::vector<Patch> out;
  out.reserve(patches_.size());
  for (const auto& p : patches_) out.push_back({p.region, i == 1 ? p.u1 : p.u2});
  return ScalarField(std::move(out));
}

std::vector<RefinedCell> overlay(const std::vector<PolyRegion>& a, const std::vector<PolyRegion>& b) {
  std::vector<RefinedCell> out;
  if (same_partition(a, b)) {
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back({a[i], {i, i}});
    return out;
  }
  BucketIndex index(a);
  Rational covered = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t i : index.query(b[j].bbox())) {
      if (auto r = intersect(a[i], b[j])) {
        covered += r->area();
        out.push_back({std::move(*r), {i, j}});
      }
    }
  }
  Rational expected = std::min(total_area(a), total_area(b));
  if (covered != expected) {
    throw CarpetError(ErrorCode::SupportMismatch,
                      "refinement covers " + to_string(covered) + ", expected " + to_string(expected));
  }
  return out;
}

std::vector<RefinedCell> overlay(const std::vector<std::vector<PolyRegion>>& partitions) {
  if (partitions.empty()) return {};
  std::vector<RefinedCell> cells;
  cells.reserve(partitions[0].size());
  for (std::size_t i = 0; i < partitions[0].size(); ++i) cells.push_back({partitions[0][i], {i}});
  for (std::size_t k = 1; k < partitions.size(); ++k) {
    std::vector<PolyRegion> current;
    current.reserve(cells.size());
    for (const auto& c : cells) current.push_back(c.region);
    auto step = overlay(current, partitions[k]);
    std::vector<RefinedCell> next;
    next.reserve(step.size());
    for (auto& s : step) {
      auto source = cells[s.source[0]].source;
      source.push_back(s.source[1]);
      next.push_back({std::move(s.region), std::move(source)});
    }
    cells.swap(next);
  }
  return cells;
}

VectorField gradient(const ScalarField& f) {
  std::vector<VectorPatch> out;
  out.reserve(f.size());
  for (const auto& p : f.patches()) out.push_back({p.region, p.value.dx(), p.value.dy()});
  return VectorField(std::move(out));
}

ScalarField curl(const VectorField& v) {
  std::vector<Patch> out;
  out.reserve(v.size());
  for (const auto& p : v.patches()) out.push_back({p.region, p.u2.dx() - p.u1.dy()});
  return ScalarField(std::move(out));
}

namespace {

template <class Combine>
ScalarField combine(const ScalarField& a, const ScalarField& b, Combine&& fn) {
  auto cells = overlay(a.regions(), b.regions());
  std::vector<Patch> out;
  out.reserve(cells.size());
  for (auto& c : cells) {
    out.push_back({std::move(c.region), fn(a.patches()[c.source[0]].value, b.patches()[c.source[1]].value)});
  }
  ScalarField r(std::move(out));
  r.continuous = a.continuous && b.continuous;
  return r;
}

}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return combine(a, b, [](const Poly2& p, const Poly2& q) { return p + q; });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return combine(a, b, [](const Poly2& p, const Poly2& q) { return p - q; });
}

ScalarField operator*(const Rational& s, const ScalarField& f) {
  std::vector<Patch> out;
  out.reserve(f.size());
  for (const auto& p : f.patches()) out.push_back({p.region, s * p.value});
  ScalarField r(std::move(out));
  r.continuous = f.continuous;
  return r;
}

ScalarField product(const ScalarField& a, const ScalarField& b) {
  return combine(a, b, [](const Poly2& p, const Poly2& q) { return p * q; });
}

VectorField product(const ScalarField& h, const VectorField& w) {
  auto cells = overlay(h.regions(), w.regions());
  std::vector<VectorPatch> out;
  out.reserve(cells.size());
  for (auto& c : cells) {
    const Poly2& hv = h.patches()[c.source[0]].value;
    const auto& wp = w.patches()[c.source[1]];
    out.push_back({std::move(c.region), hv * wp.u1, hv * wp.u2});
  }
  return VectorField(std::move(out));
}

ScalarField dot(const VectorField& a, const VectorField& b) {
  auto cells = overlay(a.regions(), b.regions());
  std::vector<Patch> out;
  out.reserve(cells.size());
  for (auto& c : cells) {
    const auto& p = a.patches()[c.source[0]];
    const auto& q = b.patches()[c.source[1]];
    out.push_back({std::move(c.region), p.u1 * q.u1 + p.u2 * q.u2});
  }
  return ScalarField(std::move(out));
}

ScalarField refine(const ScalarField& f, const std::vector<PolyRegion>& partition) {
  auto cells = overlay(f.regions(), partition);
  std::vector<Patch> out;
  out.reserve(cells.size());
  for (auto& c : cells) out.push_back({std::move(c.region), f.patches()[c.source[0]].value});
  ScalarField r(std::move(out));
  r.continuous = f.continuous;
  return r;
}

Value integral(const ScalarField& f, const Prefractal& pf) {
  const auto& ps = f.patches();
  return sum_patches(pf, ps.size(), [&](std::size_t i) { return pf.integrate(ps[i].value, ps[i].region); });
}

Value dirichlet_energy(const ScalarField& f, const Prefractal& pf) {
  const auto& ps = f.patches();
  return sum_patches(pf, ps.size(), [&](std::size_t i) {
    Poly2 gx = ps[i].value.dx();
    Poly2 gy = ps[i].value.dy();
    return pf.integrate(gx * gx + gy * gy, ps[i].region);
  });
}

Value l2_norm_sq(const ScalarField& f, const Prefractal& pf) {
  const auto& ps = f.patches();
  return sum_patches(pf, ps.size(),
                     [&](std::size_t i) { return pf.integrate(ps[i].value * ps[i].value, ps[i].region); });
}

Value l2_norm_sq(const VectorField& v, const Prefractal& pf) {
  const auto& ps = v.patches();
  return sum_patches(pf, ps.size(), [&](std::size_t i) {
    return pf.integrate(ps[i].u1 * ps[i].u1 + ps[i].u2 * ps[i].u2, ps[i].region);
  });
}

Rational sup_norm(const ScalarField& f) {
  Rational best = 0;
  for (const auto& p : f.patches()) {
    if (p.value.degree() > 1) throw CarpetError(ErrorCode::DegreeOverflow, "sup_norm needs affine patches");
    for (const auto& v : p.region.vertices()) {
      Rational a = abs(p.value(v.x, v.y));
      if (a > best) best = a;
    }
  }
  return best;
}

namespace {

// Parameter of r along p->q, assuming collinearity.
Rational along(const Point& p, const Point& q, const Point& r) {
  if (p.x != q.x) return (r.x - p.x) / (q.x - p.x);
  return (r.y - p.y) / (q.y - p.y);
}

}  // namespace

bool is_continuous(const ScalarField& f) {
  const auto& ps = f.patches();
  auto regions = f.regions();
  BucketIndex index(regions);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto& vi = ps[i].region.vertices();
    for (std::size_t j : index.query(ps[i].region.bbox())) {
      if (j <= i) continue;
      const auto& vj = ps[j].region.vertices();
      const bool quadratic = ps[i].value.degree() > 1 || ps[j].value.degree() > 1;
      for (std::size_t a = 0; a < vi.size(); ++a) {
        const Point& p = vi[a];
        const Point& q = vi[(a + 1) % vi.size()];
        for (std::size_t b = 0; b < vj.size(); ++b) {
          const Point& r = vj[b];
          const Point& s = vj[(b + 1) % vj.size()];
          if (sgn(cross(p, q, r)) != 0 || sgn(cross(p, q, s)) != 0) continue;
          Rational t0 = along(p, q, r);
          Rational t1 = along(p, q, s);
          if (t0 > t1) std::swap(t0, t1);
          Rational lo = std::max(Rational(0), t0);
          Rational hi = std::min(Rational(1), t1);
          if (lo >= hi) continue;
          std::vector<Rational> ts{lo, hi};
          if (quadratic) ts.push_back((lo + hi) / 2);
          for (const auto& t : ts) {
            Rational x = p.x + t * (q.x - p.x);
            Rational y = p.y + t * (q.y - p.y);
            if (ps[i].value(x, y) != ps[j].value(x, y)) return false;
          }
        }
      }
    }
  }
  return true;
}

std::optional<Rational> evaluate(const ScalarField& f, const Point& p) {
  for (const auto& patch : f.patches()) {
    if (patch.region.contains(p)) return patch.value(p.x, p.y);
  }
  return std::nullopt;
}

}  // namespace carpet
