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

#include <gtest/gtest.h>

#include "carpet/error.hpp"
#include "carpet/field.hpp"
#include "generators.hpp"

using carpet::CarpetSpec;
using carpet::Patch;
using carpet::Poly2;
using carpet::PolyRegion;
using carpet::Prefractal;
using carpet::Rational;
using carpet::ScalarField;

namespace {

Rational q(long n, long d) { return carpet::make_rational(n, d); }

CarpetSpec spec(std::initializer_list<Rational> ratios) {
  CarpetSpec s;
  s.ratios.assign(ratios.begin(), ratios.end());
  return s;
}

TEST(Gradient, CoordinateAndConstantPatches) {
  auto g = carpet::gradient(ScalarField::on_unit_square(Poly2::y()));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.patches()[0].u1, Poly2());
  EXPECT_EQ(g.patches()[0].u2, Poly2::constant(1));
  auto flat = carpet::gradient(ScalarField::on_unit_square(Poly2::constant(q(3, 7))));
  EXPECT_TRUE(flat.patches()[0].u1.is_zero() && flat.patches()[0].u2.is_zero());
  // a tent side: 4 eps_2/delta_2 (x - x0) with eps_2 = 4/15, delta_2 = 1/15
  Rational slope = 4 * q(4, 15) / q(1, 15);
  auto side = carpet::gradient(ScalarField::on_unit_square(Poly2::affine(-slope * q(1, 9), slope, 0)));
  EXPECT_EQ(side.patches()[0].u1, Poly2::constant(16));
  EXPECT_TRUE(side.patches()[0].u2.is_zero());
}

TEST(Curl, Examples) {
  // u = x * (0, 1)
  auto h = ScalarField::on_unit_square(Poly2::x());
  carpet::VectorField w({{PolyRegion::rectangle(0, 0, 1, 1), Poly2(), Poly2::constant(1)}});
  auto c = carpet::curl(carpet::product(h, w));
  EXPECT_EQ(c.patches()[0].value, Poly2::constant(1));
  // grad(xy) = (y, x)
  Poly2 xy = Poly2::x() * Poly2::y();
  auto g = carpet::gradient(ScalarField::on_unit_square(xy));
  EXPECT_TRUE(carpet::curl(g).patches()[0].value.is_zero());
  // h with grad h = (f, 0) against w = (0, 1) gives curl = f
  auto hk = ScalarField::on_unit_square(Poly2::affine(-q(5, 2) * q(1, 3), q(5, 2), 0));
  auto v = carpet::product(hk, w);
  EXPECT_EQ(carpet::curl(v).patches()[0].value, Poly2::constant(q(5, 2)));
}

TEST(Overlay, VerticalTimesHorizontalSplit) {
  std::vector<PolyRegion> a{PolyRegion::rectangle(0, 0, q(1, 2), 1), PolyRegion::rectangle(q(1, 2), 0, 1, 1)};
  std::vector<PolyRegion> b{PolyRegion::rectangle(0, 0, 1, q(1, 3)), PolyRegion::rectangle(0, q(1, 3), 1, 1)};
  auto cells = carpet::overlay(a, b);
  ASSERT_EQ(cells.size(), 4u);
  Rational total = 0;
  for (const auto& c : cells) {
    EXPECT_EQ(c.region.size(), 4u);
    total += c.region.area();
  }
  EXPECT_EQ(total, 1);
}

TEST(Overlay, SelfOverlayKeepsPartition) {
  gen::Source src(21);
  auto f = src.continuous_field(3, 4);
  auto regions = f.regions();
  auto cells = carpet::overlay(regions, regions);
  ASSERT_EQ(cells.size(), regions.size());
  for (std::size_t i = 0; i < cells.size(); ++i) EXPECT_EQ(cells[i].region, regions[i]);
  // shifted copy of the list forces real intersections
  std::vector<PolyRegion> rotated(regions.begin() + 1, regions.end());
  rotated.push_back(regions.front());
  auto again = carpet::overlay(regions, rotated);
  EXPECT_EQ(again.size(), regions.size());
}

TEST(Overlay, CellGridTimesStrips) {
  auto s = spec({q(1, 3), q(1, 5)});
  auto grid = carpet::cell_grid(s, 2);
  std::vector<PolyRegion> cells;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    auto b = grid.cell(k);
    cells.push_back(PolyRegion::rectangle(b.x0, b.y0, b.x1, b.y1));
  }
  // bands: strips of height 1/15 around each y-cut and the gaps between them
  std::vector<Rational> ys{0};
  for (const auto& c : grid.y_cuts) {
    ys.push_back(c - q(1, 30));
    ys.push_back(c + q(1, 30));
  }
  ys.push_back(1);
  std::vector<PolyRegion> bands;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) bands.push_back(PolyRegion::rectangle(0, ys[i], 1, ys[i + 1]));
  auto refined = carpet::overlay(cells, bands);
  Rational total = 0;
  for (const auto& c : refined) {
    EXPECT_EQ(c.region.size(), 4u);
    EXPECT_EQ(c.region.bbox().x1 - c.region.bbox().x0, c.region.area() / (c.region.bbox().y1 - c.region.bbox().y0));
    total += c.region.area();
  }
  EXPECT_EQ(total, 1);
}

TEST(Overlay, DetectsSupportMismatch) {
  std::vector<PolyRegion> a{PolyRegion::rectangle(0, 0, q(1, 2), 1)};
  std::vector<PolyRegion> b{PolyRegion::rectangle(q(1, 4), 0, 1, 1)};
  try {
    carpet::overlay(a, b);
    FAIL();
  } catch (const carpet::CarpetError& e) {
    EXPECT_EQ(e.code(), carpet::ErrorCode::SupportMismatch);
  }
}

TEST(Energy, CoordinateAndConstant) {
  auto s = spec({q(1, 3), q(1, 5), q(1, 7)});
  for (int m = 0; m <= 3; ++m) {
    Prefractal pf(s, m);
    EXPECT_EQ(carpet::dirichlet_energy(ScalarField::on_unit_square(Poly2::y()), pf).rational(),
              carpet::prefractal_measure(s, m));
    EXPECT_EQ(carpet::dirichlet_energy(ScalarField::on_unit_square(Poly2::constant(5)), pf).rational(), 0);
  }
}

TEST(L2Norm, Examples) {
  auto s = spec({q(1, 3)});
  Prefractal p0(s, 0), p1(s, 1);
  EXPECT_EQ(carpet::l2_norm_sq(ScalarField::on_unit_square(Poly2::constant(1)), p1).rational(), q(8, 9));
  EXPECT_EQ(carpet::l2_norm_sq(ScalarField::on_unit_square(Poly2::x()), p0).rational(), q(1, 3));
  EXPECT_EQ(carpet::l2_norm_sq(ScalarField::on_unit_square(Poly2::y()), p0).rational(), q(1, 3));
  EXPECT_EQ(carpet::l2_norm_sq(ScalarField::on_unit_square(Poly2::x()), p1).rational(), q(74, 243));
  // degree-2 monomials integrate directly
  EXPECT_EQ(carpet::integral(ScalarField::on_unit_square(Poly2::x() * Poly2::x()), p0).rational(), q(1, 3));
  EXPECT_EQ(carpet::integral(ScalarField::on_unit_square(Poly2::x() * Poly2::y()), p0).rational(), q(1, 4));
  EXPECT_THROW(carpet::l2_norm_sq(ScalarField::on_unit_square(Poly2::x() * Poly2::x()), p0),
               carpet::CarpetError);
}

TEST(SupNorm, Examples) {
  EXPECT_EQ(carpet::sup_norm(ScalarField::on_unit_square(Poly2::y())), 1);
  EXPECT_EQ(carpet::sup_norm(ScalarField::on_unit_square(Poly2::affine(-q(1, 2), 1, 0))), q(1, 2));
}

TEST(Properties, CurlOfGradientVanishes) {
  gen::Source src(31);
  for (int t = 0; t < 50; ++t) {
    auto f = src.continuous_field(static_cast<int>(src.integer(1, 4)), static_cast<int>(src.integer(1, 4)));
    ASSERT_TRUE(carpet::is_continuous(f));
    for (const auto& p : carpet::curl(carpet::gradient(f)).patches()) EXPECT_TRUE(p.value.is_zero());
  }
}

TEST(Properties, ContinuityCheckDetectsJumps) {
  gen::Source src(32);
  int jumps = 0;
  for (int t = 0; t < 10; ++t) jumps += !carpet::is_continuous(src.patchwise_field(3, 3));
  EXPECT_GT(jumps, 0);
}

TEST(Properties, EnergyInvariantUnderRefinement) {
  auto s = spec({q(1, 3), q(1, 5), q(1, 7)});
  Prefractal pf(s, 2);
  gen::Source src(33);
  for (int t = 0; t < 15; ++t) {
    auto f = src.continuous_field(3, 3);
    auto refined = carpet::refine(f, src.grid_partition(4, 3));
    EXPECT_GT(refined.size(), f.size());
    EXPECT_EQ(carpet::dirichlet_energy(f, pf).rational(), carpet::dirichlet_energy(refined, pf).rational());
    EXPECT_EQ(carpet::l2_norm_sq(f, pf).rational(), carpet::l2_norm_sq(refined, pf).rational());
  }
}

TEST(Properties, PointwiseCauchySchwarz) {
  gen::Source src(34);
  for (int t = 0; t < 20; ++t) {
    auto f = src.continuous_field(3, 2);
    auto g = src.patchwise_field(2, 3);
    auto cells = carpet::overlay(f.regions(), g.regions());
    for (const auto& c : cells) {
      const Poly2& a = f.patches()[c.source[0]].value;
      const Poly2& b = g.patches()[c.source[1]].value;
      Rational ab = a[1] * b[1] + a[2] * b[2];
      EXPECT_LE(ab * ab, (a[1] * a[1] + a[2] * a[2]) * (b[1] * b[1] + b[2] * b[2]));
    }
  }
}

TEST(Properties, SupNormBoundsSamples) {
  gen::Source src(35);
  for (int t = 0; t < 5; ++t) {
    auto f = src.continuous_field(4, 4);
    Rational sup = carpet::sup_norm(f);
    for (int k = 0; k < 200; ++k) {
      auto v = carpet::evaluate(f, src.point());
      ASSERT_TRUE(v.has_value());
      EXPECT_LE(carpet::abs(*v), sup);
    }
  }
}

TEST(Properties, Binary64EnergyAgrees) {
  auto s = spec({q(1, 3), q(1, 5), q(1, 7)});
  Prefractal exact(s, 3), f64(s, 3, carpet::Arithmetic::binary64);
  gen::Source src(36);
  auto f = src.continuous_field(3, 3);
  auto e = carpet::dirichlet_energy(f, exact);
  auto d = carpet::dirichlet_energy(f, f64);
  EXPECT_FALSE(d.exact());
  EXPECT_NEAR(e.to_double(), d.to_double(), 1e-12 * (1 + e.to_double()));
}

}  // namespace
