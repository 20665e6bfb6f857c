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

#include "carpet/counterexample.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "carpet/error.hpp"
#include "carpet/spatial.hpp"

namespace carpet {

namespace {

enum class Role { core, u_vertical, u_horizontal };

struct Block {
  Block(PolyRegion r, Poly2 p, std::int64_t c, std::int64_t w)
      : region(std::move(r)), psi(std::move(p)), col(c), row(w) {}

  PolyRegion region;
  Poly2 psi;
  std::int64_t col = 0;
  std::int64_t row = 0;
  Role role = Role::core;
  Rational cut;  // x = cut for vertical U pieces, y = cut for horizontal ones
  NeighborhoodPiece piece = NeighborhoodPiece::bottom_strip;
  // Tent the block belongs to: (column, band, upper half?), band < 0 if none.
  std::int64_t tent_col = 0;
  std::int64_t tent_band = -1;
  bool tent_upper = false;
};

// Stage-n geometry inside the surviving level-(n-1) squares.
struct Layout {
  int n = 0;
  std::int64_t R = 0;  // level-(n-1) squares per side
  Rational dp;         // delta_{n-1}
  Rational d;          // delta_n
  Rational eps;        // epsilon_n
  CellGrid grid;
  std::vector<Block> blocks;

  std::size_t cell(std::int64_t col, std::int64_t row) const {
    return static_cast<std::size_t>(row) * grid.columns() + static_cast<std::size_t>(col);
  }
  Rational cut(std::int64_t i) const { return dp * i + dp / 2; }
};

PolyRegion poly(std::initializer_list<Point> pts) {
  auto r = PolyRegion::from_convex(std::vector<Point>(pts));
  if (!r) throw CarpetError(ErrorCode::NonSimplePolygon, "degenerate stage block");
  return *r;
}

Layout make_layout(const CarpetSpec& spec, int n) {
  if (n < 1) throw CarpetError(ErrorCode::InvalidArgument, "stage must be >= 1", n);
  Layout L;
  L.n = n;
  L.dp = delta(spec, n - 1);
  L.d = delta(spec, n);
  L.eps = epsilon(spec, n);
  L.R = to_int64(Rational(1 / L.dp).get_num()).value();
  L.grid = cell_grid(spec, n);
  if (static_cast<std::int64_t>(L.grid.x_cuts.size()) != L.R) {
    throw CarpetError(ErrorCode::InvalidArgument, "cell grid does not match the level-(n-1) squares", n);
  }

  const Rational& d = L.d;
  const Rational s = 4 * L.eps / d;
  const Rational h38 = 3 * d / 8;
  const Rational h14 = d / 4;
  auto add = [&](PolyRegion r, Poly2 psi, std::int64_t col, std::int64_t row) -> Block& {
    L.blocks.push_back(Block(std::move(r), std::move(psi), col, row));
    return L.blocks.back();
  };
  auto u = [](Block& b, Role role, const Rational& cut, NeighborhoodPiece piece) {
    b.role = role;
    b.cut = cut;
    b.piece = piece;
  };
  auto tent = [](Block& b, std::int64_t col, std::int64_t band, bool upper) {
    b.tent_col = col;
    b.tent_band = band;
    b.tent_upper = upper;
  };

  for (std::int64_t j = 0; j < L.R; ++j) {
    for (std::int64_t i = 0; i < L.R; ++i) {
      if (!square_survives(spec, n - 1, i, j)) continue;
      const Rational x0 = L.dp * i, cx = L.cut(i), x1 = cx - d / 2, x2 = cx + d / 2, x3 = x0 + L.dp;
      const Rational y0 = L.dp * j, cy = L.cut(j), y1 = cy - d / 2, y2 = cy + d / 2, y3 = y0 + L.dp;
      const Poly2 zero;
      const Poly2 rise_left = Poly2::affine(-s * x1, s, 0);
      const Poly2 rise_right = Poly2::affine(s * x2, -s, 0);

      // corners
      add(PolyRegion::rectangle(x0, y0, x1, y1), zero, i, j);
      add(PolyRegion::rectangle(x2, y0, x3, y1), zero, i + 1, j);
      add(PolyRegion::rectangle(x0, y2, x1, y3), zero, i, j + 1);
      add(PolyRegion::rectangle(x2, y2, x3, y3), zero, i + 1, j + 1);

      // strip segments beside the hole, split at the cut
      u(add(PolyRegion::rectangle(x0, y1, x1, cy), zero, i, j), Role::u_horizontal, cy, NeighborhoodPiece::top_strip);
      u(add(PolyRegion::rectangle(x0, cy, x1, y2), zero, i, j + 1), Role::u_horizontal, cy,
        NeighborhoodPiece::bottom_strip);
      u(add(PolyRegion::rectangle(x2, y1, x3, cy), zero, i + 1, j), Role::u_horizontal, cy,
        NeighborhoodPiece::top_strip);
      u(add(PolyRegion::rectangle(x2, cy, x3, y2), zero, i + 1, j + 1), Role::u_horizontal, cy,
        NeighborhoodPiece::bottom_strip);

      // below the hole: upper half of the tent in band j
      {
        const Poly2 lift = Poly2::affine(-(y1 - L.eps), 0, 1);
        tent(add(poly({{x1, y0}, {cx - h38, y0}, {cx - h14, y1}, {x1, y1}}), rise_left, i, j), i, j, true);
        tent(add(poly({{cx + h38, y0}, {x2, y0}, {x2, y1}, {cx + h14, y1}}), rise_right, i + 1, j), i, j, true);
        Block& l = add(poly({{cx - h38, y0}, {cx, y0}, {cx, y1}, {cx - h14, y1}}), lift, i, j);
        u(l, Role::u_vertical, cx, NeighborhoodPiece::right_trapezoid);
        tent(l, i, j, true);
        Block& r = add(poly({{cx, y0}, {cx + h38, y0}, {cx + h14, y1}, {cx, y1}}), lift, i + 1, j);
        u(r, Role::u_vertical, cx, NeighborhoodPiece::left_trapezoid);
        tent(r, i, j, true);
      }
      // above the hole: lower half of the tent in band j+1
      {
        const Poly2 lift = Poly2::affine(-y2, 0, 1);
        tent(add(poly({{x1, y2}, {cx - h38, y3}, {x1, y3}}), rise_left, i, j + 1), i, j + 1, false);
        tent(add(poly({{x2, y2}, {x2, y3}, {cx + h38, y3}}), rise_right, i + 1, j + 1), i, j + 1, false);
        Block& l = add(poly({{x1, y2}, {cx, y2}, {cx, y3}, {cx - h38, y3}}), lift, i, j + 1);
        u(l, Role::u_vertical, cx, NeighborhoodPiece::right_trapezoid);
        tent(l, i, j + 1, false);
        Block& r = add(poly({{cx, y2}, {x2, y2}, {cx + h38, y3}, {cx, y3}}), lift, i + 1, j + 1);
        u(r, Role::u_vertical, cx, NeighborhoodPiece::left_trapezoid);
        tent(r, i, j + 1, false);
      }
    }
  }
  return L;
}

// Convex hull, counter-clockwise; used to merge adjacent convex pieces whose
// union is convex.
std::vector<Point> hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && sgn(cross(h[k - 2], h[k - 1], p)) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Affine function through three points with given values.
Poly2 interpolate(const Point& a, const Point& b, const Point& c, const Rational& va, const Rational& vb,
                  const Rational& vc) {
  Rational det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  Rational cx = ((vb - va) * (c.y - a.y) - (vc - va) * (b.y - a.y)) / det;
  Rational cy = ((vc - va) * (b.x - a.x) - (vb - va) * (c.x - a.x)) / det;
  return Poly2::affine(va - cx * a.x - cy * a.y, cx, cy);
}

Rational lebesgue_energy(const std::vector<Patch>& patches) {
  Rational e = 0;
  for (const auto& p : patches) {
    Rational gx = p.value[1], gy = p.value[2];
    e += p.region.area() * (gx * gx + gy * gy);
  }
  return e;
}

}  // namespace

Rational StripSet::area() const {
  Rational a = 0;
  for (const auto& s : strips) a += s.region.area();
  return a;
}

StripSet build_Fn(const CarpetSpec& spec, int n) {
  if (n < 1) throw CarpetError(ErrorCode::InvalidArgument, "stage must be >= 1", n);
  StripSet set;
  set.stage = n;
  set.height = delta(spec, n);
  for (const auto& c : cell_grid(spec, n).y_cuts) {
    set.strips.push_back({c, set.height, PolyRegion::rectangle(0, c - set.height / 2, 1, c + set.height / 2)});
  }
  if (set.area() > spec.ratio(n)) throw CarpetError(ErrorCode::InvalidArgument, "strip area exceeds a_n", n);
  return set;
}

ScalarField build_phi_n(const CarpetSpec& spec, int n) {
  if (n < 1) throw CarpetError(ErrorCode::InvalidArgument, "stage must be >= 1", n);
  const Rational dp = delta(spec, n - 1), d = delta(spec, n);
  const std::int64_t R = to_int64(Rational(1 / dp).get_num()).value();
  std::vector<Patch> patches;
  for (std::int64_t j = 0; j < R; ++j) {
    const Rational y0 = dp * j, y1 = y0 + dp / 2 - d / 2, y2 = y1 + d, y3 = y0 + dp;
    patches.push_back({PolyRegion::rectangle(0, y0, 1, y1), Poly2::affine(-d * j, 0, 1)});
    patches.push_back({PolyRegion::rectangle(0, y1, 1, y2), Poly2::constant(y1 - d * j)});
    patches.push_back({PolyRegion::rectangle(0, y2, 1, y3), Poly2::affine(-d * (j + 1), 0, 1)});
  }
  ScalarField phi(std::move(patches));
  phi.continuous = true;
  return phi;
}

const char* tent_kind_name(TentKind k) {
  switch (k) {
    case TentKind::full: return "full";
    case TentKind::lower_half: return "lower-half";
    case TentKind::upper_half: return "upper-half";
  }
  return "";
}

Rational Tent::energy() const { return lebesgue_energy(patches); }

std::vector<Tent> build_tents(const CarpetSpec& spec, int n) {
  Layout L = make_layout(spec, n);
  // (band, column) -> patches of the lower and upper halves
  std::map<std::pair<std::int64_t, std::int64_t>, std::pair<std::vector<Patch>, std::vector<Patch>>> halves;
  for (const auto& b : L.blocks) {
    if (b.tent_band < 0) continue;
    auto& h = halves[{b.tent_band, b.tent_col}];
    (b.tent_upper ? h.second : h.first).push_back({b.region, b.psi});
  }
  const Rational& d = L.d;
  std::vector<Tent> out;
  for (auto& [key, h] : halves) {
    const auto [band, col] = key;
    const Rational cx = L.cut(col), x1 = cx - d / 2, x2 = cx + d / 2;
    const Rational mid = L.dp * band;  // edge between the two level-(n-1) squares
    const Rational lo = mid - L.eps / 2, hi = mid + L.eps / 2;
    const bool lower = !h.first.empty(), upper = !h.second.empty();
    const Rational bottom = lower ? lo : mid, top = upper ? hi : mid;
    const Rational wb = lower ? Rational(d / 2) : Rational(3 * d / 8);
    const Rational wt = upper ? Rational(d / 4) : Rational(3 * d / 8);
    Tent t{col,
           band,
           lower && upper ? TentKind::full : lower ? TentKind::lower_half : TentKind::upper_half,
           PolyRegion::rectangle(x1, bottom, x2, top),
           poly({{cx - wb, bottom}, {cx + wb, bottom}, {cx + wt, top}, {cx - wt, top}}),
           std::move(h.first)};
    t.patches.insert(t.patches.end(), h.second.begin(), h.second.end());
    out.push_back(std::move(t));
  }
  return out;
}

Rational full_tent_energy(const CarpetSpec& spec, int n) {
  Rational e = epsilon(spec, n), d = delta(spec, n);
  return Rational(3, 4) * e * d + 4 * e * e * e / d;
}

Rational tent_energy_bound(const CarpetSpec& spec, int n) {
  Rational e = epsilon(spec, n), d = delta(spec, n);
  return Rational(3, 4) * e * d + 8 * e * e * e / d;
}

Rational psi_energy_bound(const CarpetSpec& spec, int n) {
  Rational a = spec.ratio(n), c = 1 - a;
  return Rational(3, 2) * c * delta(spec, n) + 16 * c * c * c * delta(spec, n - 1) / a;
}

Rational full_tent_equivalents(const std::vector<Tent>& tents) {
  Rational c = 0;
  for (const auto& t : tents) c += t.kind == TentKind::full ? Rational(1) : Rational(1, 2);
  return c;
}

ScalarField build_psi_n(const CarpetSpec& spec, int n) {
  Layout L = make_layout(spec, n);
  std::vector<Patch> patches;
  patches.reserve(L.blocks.size());
  for (auto& b : L.blocks) patches.push_back({std::move(b.region), std::move(b.psi)});
  ScalarField psi(std::move(patches));
  psi.continuous = true;
  return psi;
}

const char* neighborhood_piece_name(NeighborhoodPiece p) {
  switch (p) {
    case NeighborhoodPiece::bottom_strip: return "bottom-strip";
    case NeighborhoodPiece::top_strip: return "top-strip";
    case NeighborhoodPiece::left_trapezoid: return "left-trapezoid";
    case NeighborhoodPiece::right_trapezoid: return "right-trapezoid";
  }
  return "";
}

std::vector<std::size_t> constancy_violations(const ScalarField& g,
                                              const std::vector<BoundaryNeighborhood>& neighborhoods) {
  BucketIndex index(g.regions());
  std::vector<std::size_t> bad;
  for (const auto& nb : neighborhoods) {
    bool ok = true;
    for (const auto& [kind, region] : nb.pieces) {
      for (std::size_t i : index.query(region.bbox())) {
        const auto& p = g.patches()[i];
        if (p.value.dx().is_zero() && p.value.dy().is_zero()) continue;
        if (intersect(p.region, region)) ok = false;
      }
    }
    if (!ok) bad.push_back(nb.cell);
  }
  return bad;
}

GnResult build_g_n(const CarpetSpec& spec, int n) {
  Layout L = make_layout(spec, n);
  std::map<std::pair<std::size_t, NeighborhoodPiece>, std::vector<Point>> pieces;
  std::vector<Patch> psi_patches;
  psi_patches.reserve(L.blocks.size());
  for (const auto& b : L.blocks) {
    psi_patches.push_back({b.region, b.psi});
    if (b.role == Role::core) continue;
    auto& pts = pieces[{L.cell(b.col, b.row), b.piece}];
    pts.insert(pts.end(), b.region.vertices().begin(), b.region.vertices().end());
  }
  ScalarField psi(std::move(psi_patches));
  psi.continuous = true;

  GnResult out;
  out.field = build_phi_n(spec, n) - psi;
  for (auto& [key, pts] : pieces) {
    if (out.neighborhoods.empty() || out.neighborhoods.back().cell != key.first) {
      out.neighborhoods.push_back({key.first, {}});
    }
    out.neighborhoods.back().pieces.emplace_back(key.second, PolyRegion(hull(std::move(pts))));
  }
  auto bad = constancy_violations(out.field, out.neighborhoods);
  if (!bad.empty()) {
    throw CarpetError(ErrorCode::LocalConstancyViolated, "grad g_n does not vanish on U_{n,k}",
                      static_cast<long>(bad.front()));
  }
  return out;
}

ScalarField build_cell_cutoff(const CarpetSpec& spec, int n, const CellMap& map) {
  Layout L = make_layout(spec, n);
  std::vector<Poly2> maps(L.grid.size());
  for (std::size_t k = 0; k < maps.size(); ++k) maps[k] = map(k, L.grid.center(k));
  std::vector<Patch> patches;
  for (auto& b : L.blocks) {
    const Poly2& A = maps[L.cell(b.col, b.row)];
    if (b.role == Role::core) {
      patches.push_back({std::move(b.region), A});
      continue;
    }
    const auto& v = b.region.vertices();
    std::vector<Rational> val(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Rational& along = b.role == Role::u_vertical ? v[i].x : v[i].y;
      val[i] = along == b.cut ? Rational(0) : A(v[i].x, v[i].y);
    }
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
      patches.push_back({poly({v[0], v[i], v[i + 1]}), interpolate(v[0], v[i], v[i + 1], val[0], val[i], val[i + 1])});
    }
  }
  ScalarField out(std::move(patches));
  out.continuous = true;
  return out;
}

ScalarField build_cell_constant(const CarpetSpec& spec, int n,
                                const std::function<Rational(std::size_t, const Point&)>& map) {
  Layout L = make_layout(spec, n);
  std::vector<Rational> vals(L.grid.size());
  for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = map(k, L.grid.center(k));
  std::vector<Patch> patches;
  patches.reserve(L.blocks.size());
  for (auto& b : L.blocks) patches.push_back({std::move(b.region), Poly2::constant(vals[L.cell(b.col, b.row)])});
  return ScalarField(std::move(patches));
}

namespace {

Rational value_at(const ScalarField& f, const Point& p) {
  auto v = evaluate(f, p);
  if (!v) throw CarpetError(ErrorCode::InvalidArgument, "f is not defined at a cell center");
  return *v;
}

}  // namespace

ScalarField build_h_n(const CarpetSpec& spec, int n, const ScalarField& f) {
  return build_cell_cutoff(spec, n, [&](std::size_t, const Point& c) {
    Rational fk = value_at(f, c);
    return Poly2::affine(-fk * c.x, fk, 0);
  });
}

VectorField build_v_n(const CarpetSpec& spec, int n, const ScalarField& f) {
  return product(build_h_n(spec, n, f), gradient(build_g_n(spec, n).field));
}

namespace {

// Largest |c_x| plus largest |c_y| over the patches of an affine field.
Rational slope_sum(const ScalarField& f) {
  Rational bx = 0, by = 0;
  for (const auto& p : f.patches()) {
    bx = std::max(bx, abs(p.value[1]));
    by = std::max(by, abs(p.value[2]));
  }
  return bx + by;
}

std::size_t nonzero_patches(const ScalarField& f) {
  std::size_t c = 0;
  for (const auto& p : f.patches()) c += !p.value.is_zero();
  return c;
}

}  // namespace

VerificationReport verify_theorem1(const CarpetSpec& spec, const ScalarField& f, int n_max, int m, Arithmetic mode) {
  if (n_max < 1 || m < n_max) throw CarpetError(ErrorCode::InvalidArgument, "need 1 <= n_max <= m");
  if (!f.is_affine()) throw CarpetError(ErrorCode::DegreeOverflow, "f must be piecewise affine");
  auto checked = validate_spec(spec);
  VerificationReport rep;
  rep.mode = mode;
  for (const auto& note : checked.diagnostics.notes) rep.warnings.push_back(note);

  const std::string sec = "theorem1";
  Prefractal pf(spec, m, mode);
  auto& measure_row = rep.add(sec, 0, "measure_Sm", pf.measure(), std::nullopt, Relation::info, false,
                              "lambda^2(S_{a,m}); tail gives lambda^2(S_a) = measure * [lower, upper]");
  if (spec.generator != Generator::none) {
    try {
      measure_row.tail = tail_measure_bounds(spec, m);
    } catch (const CarpetError& e) {
      rep.warnings.push_back(std::string("tail bound: ") + e.what());
    }
  }

  const auto& diag = checked.diagnostics;
  rep.add_flag(sec, 0, "hypothesis_square_summable", Rational(diag.square_summable ? 1 : 0), diag.square_summable,
               false, "a in l2, needed for lambda^2(S_a) > 0");
  rep.add_flag(sec, 0, "hypothesis_r_to_zero", Rational(diag.r_to_zero ? 1 : 0), diag.r_to_zero, false,
               "delta_{n-1}/a_n -> 0");

  const ScalarField g = ScalarField::on_unit_square(Poly2::y());
  const Rational f_sup = sup_norm(f);
  const Rational slopes = slope_sum(f);
  std::optional<Value> prev_v, prev_gn;

  for (int n = 1; n <= n_max; ++n) {
    const Rational a = spec.ratio(n), dp = delta(spec, n - 1);

    // strips and phi_n
    StripSet strips = build_Fn(spec, n);
    rep.add(sec, n, "strip_area", strips.area(), Value(a), Relation::le, true, "lambda^2(F_n) = #strips * delta_n");
    rep.add(sec, n, "strip_count", Rational(static_cast<long>(strips.strips.size())), Value(1 / dp), Relation::le,
            true, "#strips <= 1/delta_{n-1}");
    ScalarField phi = build_phi_n(spec, n);
    Value e_phi = dirichlet_energy(g - phi, pf);
    rep.add(sec, n, "energy_g_minus_phi", e_phi, Value(a), Relation::le, true, "E_S(g - phi_n) <= a_n");

    // tents and psi_n
    auto tents = build_tents(spec, n);
    Rational worst = 0;
    for (const auto& t : tents) worst = std::max(worst, t.energy());
    rep.add(sec, n, "tent_energy_max", worst, Value(tent_energy_bound(spec, n)), Relation::le, true,
            "largest Lebesgue tent energy vs (3/4)eps delta + 8 eps^3/delta");
    for (const auto& t : tents) {
      if (t.kind != TentKind::full) continue;
      rep.add(sec, n, "tent_energy_full", t.energy(), Value(full_tent_energy(spec, n)), Relation::eq, true,
              "exact full tent energy (3/4)eps delta + 4 eps^3/delta");
      break;
    }
    rep.add(sec, n, "tent_count", full_tent_equivalents(tents), Value(2 / dp), Relation::le, false,
            "full-tent equivalents vs the claimed count 2/delta_{n-1}");
    ScalarField psi = build_psi_n(spec, n);
    Value e_psi = dirichlet_energy(psi, pf);
    rep.add(sec, n, "energy_psi", e_psi, Value(psi_energy_bound(spec, n)), Relation::le, true,
            "E_S(psi_n) <= (3/2)(1-a_n)delta_n + 16(1-a_n)^3 delta_{n-1}/a_n");
    rep.add(sec, n, "psi_sup", sup_norm(psi), Value(epsilon(spec, n)), Relation::eq, true, "sup psi_n = eps_n");

    // g_n and local constancy
    GnResult gn = build_g_n(spec, n);
    rep.add(sec, n, "constancy_violations",
            Rational(static_cast<long>(constancy_violations(gn.field, gn.neighborhoods).size())), Value(0),
            Relation::eq, true, "cells where grad g_n does not vanish on U_{n,k}");
    Value e_gn = dirichlet_energy(g - gn.field, pf);
    auto& tri = rep.add(sec, n, "energy_g_minus_gn", e_gn, std::nullopt, Relation::le, true,
                        "E_S(g - g_n) <= (E_S(g - phi_n)^{1/2} + E_S(psi_n)^{1/2})^2");
    tri.pass = le_square_of_root_sum(e_gn, e_phi, e_psi);
    {
      auto& row = rep.add(sec, n, "energy_g_minus_gn_vs_a", e_gn, std::nullopt, Relation::le, true,
                          "E_S(g - g_n) <= (a_n^{1/2} + E_S(psi_n)^{1/2})^2");
      row.pass = le_square_of_root_sum(e_gn, Value(a), e_psi);
    }
    VectorField grad_gn = gradient(gn.field);
    ScalarField second = grad_gn.component(2);
    std::vector<Patch> shifted;
    shifted.reserve(second.size());
    for (const auto& p : second.patches()) shifted.push_back({p.region, p.value - Poly2::constant(1)});
    rep.add(sec, n, "gradient_component_defect", l2_norm_sq(ScalarField(std::move(shifted)), pf), e_gn,
            Relation::le, true, "int ((grad g_n)_2 - 1)^2 <= E_S(g - g_n)");

    // h_n, v_n
    ScalarField h = build_h_n(spec, n, f);
    Rational h_sup = sup_norm(h);
    rep.add(sec, n, "h_sup", h_sup, Value(f_sup * dp), Relation::le, true, "sup h_n <= ||f||_sup delta_{n-1}");
    rep.add(sec, n, "h_sup_vs_1/n", h_sup, Value(f_sup / n), Relation::le, false, "sup h_n <= ||f||_sup / n");
    VectorField v = product(h, grad_gn);
    Value v_norm = l2_norm_sq(v, pf);
    rep.add(sec, n, "v_norm", v_norm, Value(h_sup * h_sup) * dirichlet_energy(gn.field, pf), Relation::le, true,
            "||v_n||^2 <= (sup h_n)^2 int |grad g_n|^2");
    if (prev_v) rep.add(sec, n, "v_norm_trend", v_norm, *prev_v, Relation::lt, false, "||v_n||^2 < ||v_{n-1}||^2");
    prev_v = v_norm;
    if (prev_gn) {
      rep.add(sec, n, "energy_g_minus_gn_trend", e_gn, *prev_gn, Relation::lt, false,
              "E_S(g - g_n) < E_S(g - g_{n-1})");
    }
    prev_gn = e_gn;

    ScalarField cv = curl(v);
    ScalarField fk = build_cell_constant(spec, n, [&](std::size_t, const Point& c) { return value_at(f, c); });
    ScalarField expected = product(fk, grad_gn.component(2));
    rep.add(sec, n, "curl_identity_violations", Rational(static_cast<long>(nonzero_patches(cv - expected))), Value(0),
            Relation::eq, true, "curl v_n = f_{n,k} (grad g_n)_2 patchwise");
    Value defect = l2_norm_sq(cv - f, pf);
    const Rational osc = slopes * dp / 2;
    auto& env = rep.add(sec, n, "curl_defect", defect, std::nullopt, Relation::le, true,
                        "||curl v_n - f||^2 <= (||f||_sup E_S(g-g_n)^{1/2} + osc lambda^2(S_m)^{1/2})^2");
    env.pass = le_square_of_root_sum(defect, Value(f_sup * f_sup) * e_gn, Value(osc * osc * pf.measure()));

    rep.add(sec, n, "psi_bound", psi_energy_bound(spec, n), std::nullopt, Relation::info, false, "B_n");
    rep.add(sec, n, "r_n", Rational(dp / a), std::nullopt, Relation::info, false, "delta_{n-1}/a_n");
  }
  return rep;
}

}  // namespace carpet
