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

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "carpet/commands.hpp"
#include "carpet/config.hpp"
#include "carpet/counterexample.hpp"
#include "carpet/error.hpp"
#include "carpet/svg.hpp"
#include "json.hpp"

using carpet::CarpetError;
using carpet::CarpetSpec;
using carpet::ErrorCode;
using carpet::Rational;
using carpet::RunConfig;

namespace fs = std::filesystem;

namespace {

Rational q(long n, long d) { return carpet::make_rational(n, d); }

CarpetSpec spec(std::initializer_list<Rational> ratios) {
  CarpetSpec s;
  s.ratios.assign(ratios.begin(), ratios.end());
  return s;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("carpetcurl_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

ErrorCode config_error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const CarpetError& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

// Surviving level-m squares by testing each square's center against the
// explicit hole list.
long oracle_square_count(const CarpetSpec& s, int m) {
  std::vector<carpet::Hole> holes;
  for (int n = 1; n <= m; ++n) {
    auto h = carpet::enumerate_holes(s, n);
    holes.insert(holes.end(), h.begin(), h.end());
  }
  Rational side = carpet::delta(s, m);
  long rows = static_cast<long>(Rational(1 / side).get_num().get_si());
  long total = 0;
  for (long iy = 0; iy < rows; ++iy) {
    for (long ix = 0; ix < rows; ++ix) {
      Rational cx = side * ix + side / 2, cy = side * iy + side / 2;
      bool inside = false;
      for (const auto& h : holes) {
        if (abs(cx - h.center.x) < h.side / 2 && abs(cy - h.center.y) < h.side / 2) {
          inside = true;
          break;
        }
      }
      total += !inside;
    }
  }
  return total;
}

TEST(Config, RatioList) {
  auto r = carpet::parse_ratio_list("1/3, 1/5,1/7");
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[2], q(1, 7));
  EXPECT_EQ(config_error_code([] { carpet::parse_ratio_list("1/3, one fifth"); }), ErrorCode::ConfigError);
  EXPECT_EQ(config_error_code([] { carpet::parse_ratio_list(""); }), ErrorCode::ConfigError);
}

TEST(Config, FileFormat) {
  RunConfig c = carpet::parse_config(
      "# carpet\n"
      "generator = odd-reciprocal\n"
      "ratios = 1/3, 1/5\n"
      "\n"
      "depth = 3   # prefractal level\n"
      "nmax = 2\n"
      "mode = f64\n"
      "f = affine:1,1/2,-1\n");
  EXPECT_EQ(c.spec.ratios.size(), 2u);
  EXPECT_EQ(c.spec.generator, carpet::Generator::odd_reciprocal);
  EXPECT_EQ(c.depth, 3);
  EXPECT_EQ(c.n_max, 2);
  EXPECT_EQ(c.mode, carpet::Arithmetic::binary64);
  EXPECT_EQ(c.figure_stage(), 2);
  EXPECT_NO_THROW(carpet::check_config(c));
}

TEST(Config, Defaults) {
  RunConfig c;
  EXPECT_EQ(c.depth, 4);
  EXPECT_EQ(c.n_max, 3);
  EXPECT_EQ(c.spec.ratio(4), q(1, 9));
  EXPECT_EQ(c.f, "const");
  EXPECT_NO_THROW(carpet::check_config(c));
}

TEST(Config, MalformedInputIsConfigError) {
  for (const char* text : {"ratios = 1/3, 1/x\n", "colour = red\n", "depth\n", "depth = 4.5\n", "mode = fast\n",
                           "generator = fibonacci\n", "f = sin\n", "f = affine:1,2\n"}) {
    EXPECT_EQ(config_error_code([&] { carpet::parse_config(text); }), ErrorCode::ConfigError) << text;
  }
}

TEST(Config, CheckRejectsBadSpecsAndRanges) {
  auto checked = [](const std::string& text) {
    return config_error_code([&] { carpet::check_config(carpet::parse_config(text)); });
  };
  EXPECT_EQ(checked("ratios = 1/3, 1/4\ndepth = 2\nnmax = 1\n"), ErrorCode::ConfigError);
  EXPECT_EQ(checked("ratios = 1/2\ndepth = 1\nnmax = 1\n"), ErrorCode::ConfigError);
  EXPECT_EQ(checked("ratios = 1/3, 1/5\n"), ErrorCode::ConfigError);  // depth 4 beyond list
  EXPECT_EQ(checked("depth = 2\nnmax = 3\n"), ErrorCode::ConfigError);
  EXPECT_EQ(checked("stage = 9\n"), ErrorCode::ConfigError);
  EXPECT_EQ(checked("nmax = 0\n"), ErrorCode::ConfigError);
}

TEST(Config, TestFunctions) {
  EXPECT_EQ(carpet::parse_f("const"), carpet::Poly2::constant(1));
  EXPECT_EQ(carpet::parse_f("x"), carpet::Poly2::x());
  EXPECT_EQ(carpet::parse_f("affine:1/2,0,3"), carpet::Poly2::affine(q(1, 2), 0, 3));
}

TEST(SvgCarpet, SquareCounts) {
  EXPECT_EQ(count(carpet::svg_carpet(spec({q(1, 3)}), 1), "class=\"sq\""), 8u);
  CarpetSpec s2 = spec({q(1, 3), q(1, 5)});
  EXPECT_EQ(count(carpet::svg_carpet(s2, 2), "class=\"sq\""), 192u);
  EXPECT_EQ(oracle_square_count(s2, 2), 192);
  CarpetSpec s3 = spec({q(1, 3), q(1, 5), q(1, 7)});
  EXPECT_EQ(count(carpet::svg_carpet(s3, 3), "class=\"sq\""), 9216u);
}

TEST(SvgCarpet, SquaresMatchHoleOracle) {
  CarpetSpec s = spec({q(1, 5), q(1, 3)});
  for (int m = 1; m <= 2; ++m) {
    long n = 0;
    carpet::for_each_square(s, m, [&](std::int64_t, std::int64_t) { ++n; });
    EXPECT_EQ(n, oracle_square_count(s, m));
    EXPECT_EQ(carpet::Integer(n), carpet::square_count(s, m));
  }
}

TEST(SvgCarpet, CoordinatesAreScaledAndFlipped) {
  std::string svg = carpet::svg_carpet(spec({q(1, 3)}), 1);
  // bottom-left square: x = 0, y = 1000 - 1000/3 in SVG space
  EXPECT_NE(svg.find("x=\"0\" y=\"666.666666666667\" width=\"333.333333333333\""), std::string::npos);
  EXPECT_EQ(svg, carpet::svg_carpet(spec({q(1, 3)}), 1));
}

TEST(SvgCells, SixteenCellsWithCuts) {
  CarpetSpec s = spec({q(1, 3), q(1, 5)});
  std::string svg = carpet::svg_cells(s, 2);
  auto grid = carpet::cell_grid(s, 2);
  EXPECT_EQ(grid.size(), 16u);
  EXPECT_EQ(count(svg, "class=\"cell\""), 16u);
  EXPECT_EQ(count(svg, "class=\"cut\""), grid.x_cuts.size() + grid.y_cuts.size());
}

TEST(SvgPhi, ProfileIsMonotone) {
  CarpetSpec s = spec({q(1, 3), q(1, 5), q(1, 7)});
  for (int n = 1; n <= 3; ++n) {
    std::string svg = carpet::svg_phi(s, n);
    std::smatch m;
    ASSERT_TRUE(std::regex_search(svg, m, std::regex("class=\"profile\" points=\"([^\"]*)\"")));
    std::istringstream in(m[1].str());
    std::string pt;
    double last_x = -1, last_v = 1e9;
    int points = 0;
    while (in >> pt) {
      auto comma = pt.find(',');
      double x = std::stod(pt.substr(0, comma));
      double v = std::stod(pt.substr(comma + 1));  // flipped: smaller is higher
      EXPECT_GT(x, last_x);
      EXPECT_LE(v, last_v + 1e-9);
      last_x = x;
      last_v = v;
      ++points;
    }
    EXPECT_GE(points, 2);
    EXPECT_EQ(count(svg, "class=\"strip\""), carpet::build_Fn(s, n).strips.size());
  }
}

TEST(SvgPsiAndUnk, DrawnFromConstructedObjects) {
  CarpetSpec s = spec({q(1, 3), q(1, 5)});
  auto tents = carpet::build_tents(s, 2);
  std::string psi = carpet::svg_psi(s, 2);
  EXPECT_EQ(count(psi, "class=\"trap\""), tents.size());
  EXPECT_EQ(count(psi, "class=\"tent\""), tents.size());
  std::size_t pieces = 0, strips = 0;
  for (const auto& nb : carpet::build_g_n(s, 2).neighborhoods) {
    for (const auto& [kind, region] : nb.pieces) {
      ++pieces;
      strips += kind == carpet::NeighborhoodPiece::bottom_strip || kind == carpet::NeighborhoodPiece::top_strip;
    }
  }
  std::string unk = carpet::svg_unk(s, 2);
  EXPECT_EQ(count(unk, "class=\"urect\""), strips);
  EXPECT_EQ(count(unk, "class=\"utrap\""), pieces - strips);
}

TEST(Commands, CarpetAndFiguresWriteFiles) {
  RunConfig c = carpet::parse_config("ratios = 1/3, 1/5\ndepth = 2\nnmax = 2\n");
  c.out_dir = scratch("figs").string();
  std::ostringstream log;
  EXPECT_EQ(carpet::cmd_carpet(c, log), carpet::exit_pass);
  EXPECT_EQ(carpet::cmd_figures(c, log), carpet::exit_pass);
  for (const char* name : {"carpet.svg", "carpet.json", "cells.svg", "phi.svg", "psi.svg", "unk.svg"})
    EXPECT_TRUE(fs::exists(fs::path(c.out_dir) / name)) << name;
  EXPECT_EQ(count(slurp(fs::path(c.out_dir) / "carpet.svg"), "class=\"sq\""), 192u);
  fs::remove_all(c.out_dir);
}

TEST(Commands, ConfigErrorsPropagate) {
  RunConfig c = carpet::parse_config("ratios = 1/3, 1/4\ndepth = 2\nnmax = 1\n");
  std::ostringstream log;
  EXPECT_EQ(config_error_code([&] { carpet::cmd_verify(c, log); }), ErrorCode::ConfigError);
  EXPECT_EQ(config_error_code([&] { carpet::cmd_carpet(c, log); }), ErrorCode::ConfigError);
}

TEST(Commands, VerifyIsDeterministicAndExitCodeTracksReport) {
  RunConfig c = carpet::parse_config("ratios = 1/3, 1/5, 1/7\ndepth = 3\nnmax = 2\n");
  std::ostringstream log;
  c.out_dir = scratch("verify_a").string();
  int rc1 = carpet::cmd_verify(c, log);
  RunConfig c2 = c;
  c2.out_dir = scratch("verify_b").string();
  int rc2 = carpet::cmd_verify(c2, log);
  EXPECT_EQ(rc1, rc2);
  for (const char* name : {"report.csv", "report.json", "theorem1.csv"}) {
    std::string a = slurp(fs::path(c.out_dir) / name);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(fs::path(c2.out_dir) / name)) << name;
  }
  auto j = nlohmann::json::parse(slurp(fs::path(c.out_dir) / "report.json"));
  EXPECT_EQ(rc1, j["all_pass"].get<bool>() ? carpet::exit_pass : carpet::exit_bound_failed);
  EXPECT_EQ(count(slurp(fs::path(c.out_dir) / "theorem1.csv"), "\n"), 3u);
  fs::remove_all(c.out_dir);
  fs::remove_all(c2.out_dir);
}

TEST(Commands, Theorem1TableColumns) {
  RunConfig c = carpet::parse_config("ratios = 1/3, 1/5\ndepth = 2\nnmax = 1\n");
  auto rep = carpet::run_verification(c);
  std::string table = carpet::theorem1_table(rep, 1);
  EXPECT_EQ(table.substr(0, table.find('\n')),
            "n,energy_g_minus_phi,a_n,energy_psi,psi_bound,v_norm,curl_defect,pass");
  EXPECT_NE(table.find("\n1,"), std::string::npos);
  EXPECT_NE(table.find(",1/3,"), std::string::npos);
}

}  // namespace
