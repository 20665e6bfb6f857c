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

#include "carpet/svg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "carpet/counterexample.hpp"

namespace carpet {

namespace {

constexpr int kDigits = 12;

std::string sx(const Rational& x) { return to_decimal(x * 1000, kDigits); }
std::string sy(const Rational& y) { return to_decimal((1 - y) * 1000, kDigits); }

class Svg {
 public:
  explicit Svg(const std::string& title) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-20 -20 1040 1040\" width=\"1040\" height=\"1040\">\n"
         << "<title>" << title << "</title>\n"
         << "<style>"
         << ".sq{fill:#222}.frame{fill:none;stroke:#000;stroke-width:2}"
         << ".cut{stroke:#c00;stroke-width:1.5;stroke-dasharray:8 6}.cell{fill:none;stroke:#06c;stroke-width:1}"
         << ".bg{fill:#bbb}.strip{fill:#9cf;fill-opacity:0.6}.profile{fill:none;stroke:#c00;stroke-width:3}"
         << ".tent{fill:none;stroke:#060;stroke-width:1}.trap{fill:#6c6;fill-opacity:0.8}"
         << ".urect{fill:#f93;fill-opacity:0.8}.utrap{fill:#93f;fill-opacity:0.8}"
         << "</style>\n";
  }

  void rect(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1, const char* cls) {
    out_ << "<rect class=\"" << cls << "\" x=\"" << sx(x0) << "\" y=\"" << sy(y1) << "\" width=\""
         << to_decimal((x1 - x0) * 1000, kDigits) << "\" height=\"" << to_decimal((y1 - y0) * 1000, kDigits)
         << "\"/>\n";
  }

  void polygon(const PolyRegion& r, const char* cls) {
    out_ << "<polygon class=\"" << cls << "\" points=\"";
    const auto& v = r.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) out_ << (i ? " " : "") << sx(v[i].x) << ',' << sy(v[i].y);
    out_ << "\"/>\n";
  }

  void polyline(const std::vector<Point>& pts, const char* cls) {
    out_ << "<polyline class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out_ << (i ? " " : "") << sx(pts[i].x) << ',' << sy(pts[i].y);
    out_ << "\"/>\n";
  }

  void line(const Point& a, const Point& b, const char* cls) {
    out_ << "<line class=\"" << cls << "\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
         << "\" y2=\"" << sy(b.y) << "\"/>\n";
  }

  std::string finish() {
    rect(0, 0, 1, 1, "frame");
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

void squares(Svg& svg, const CarpetSpec& spec, int m, const char* cls) {
  const Rational side = delta(spec, m);
  for_each_square(spec, m, [&](std::int64_t ix, std::int64_t iy) {
    svg.rect(side * ix, side * iy, side * (ix + 1), side * (iy + 1), cls);
  });
}

void cut_lines(Svg& svg, const CellGrid& grid) {
  for (const auto& c : grid.x_cuts) svg.line({c, Rational(0)}, {c, Rational(1)}, "cut");
  for (const auto& c : grid.y_cuts) svg.line({Rational(0), c}, {Rational(1), c}, "cut");
}

}  // namespace

std::string svg_carpet(const CarpetSpec& spec, int m) {
  Svg svg("S_{a," + std::to_string(m) + "}");
  squares(svg, spec, m, "sq");
  return svg.finish();
}

std::string svg_cells(const CarpetSpec& spec, int n) {
  Svg svg("cells S_{" + std::to_string(n) + ",k}");
  squares(svg, spec, n, "bg");
  CellGrid grid = cell_grid(spec, n);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    Box b = grid.cell(k);
    svg.rect(b.x0, b.y0, b.x1, b.y1, "cell");
  }
  cut_lines(svg, grid);
  return svg.finish();
}

std::string svg_phi(const CarpetSpec& spec, int n) {
  Svg svg("phi_" + std::to_string(n));
  for (const auto& s : build_Fn(spec, n).strips) {
    // strip drawn along the horizontal axis, which carries y
    svg.rect(s.y_center - s.height / 2, 0, s.y_center + s.height / 2, 1, "strip");
  }
  std::vector<Point> pts;
  ScalarField phi = build_phi_n(spec, n);
  for (const auto& p : phi.patches()) {
    const Box& b = p.region.bbox();
    pts.push_back({b.y0, p.value(b.x0, b.y0)});
    pts.push_back({b.y1, p.value(b.x0, b.y1)});
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  svg.polyline(pts, "profile");
  return svg.finish();
}

std::string svg_psi(const CarpetSpec& spec, int n) {
  Svg svg("psi_" + std::to_string(n));
  squares(svg, spec, n, "bg");
  for (const auto& t : build_tents(spec, n)) {
    svg.polygon(t.trapezoid, "trap");
    svg.polygon(t.rectangle, "tent");
  }
  return svg.finish();
}

std::string svg_unk(const CarpetSpec& spec, int n) {
  Svg svg("U_{" + std::to_string(n) + ",k}");
  squares(svg, spec, n, "bg");
  CellGrid grid = cell_grid(spec, n);
  GnResult gn = build_g_n(spec, n);
  for (const auto& nb : gn.neighborhoods) {
    for (const auto& [kind, region] : nb.pieces) {
      bool strip = kind == NeighborhoodPiece::bottom_strip || kind == NeighborhoodPiece::top_strip;
      svg.polygon(region, strip ? "urect" : "utrap");
    }
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    Box b = grid.cell(k);
    svg.rect(b.x0, b.y0, b.x1, b.y1, "cell");
  }
  return svg.finish();
}

}  // namespace carpet
