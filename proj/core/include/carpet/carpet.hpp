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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "carpet/polygon.hpp"
#include "carpet/rational.hpp"

namespace carpet {

// How ratios continue past the explicit list.
enum class Generator {
  none,
  odd_reciprocal,  // a_n = 1/(2n+1)
  constant,        // repeat the last explicit ratio
};

const char* generator_name(Generator g);
std::optional<Generator> parse_generator(const std::string& name);

struct CarpetSpec {
  std::vector<Rational> ratios;
  Generator generator = Generator::none;

  // a_i for i >= 1. Throws StageBeyondSpec past the explicit list without a
  // generator.
  Rational ratio(int i) const;
  // 1/a_i, an odd integer >= 3 for checked specs.
  long reciprocal(int i) const;
  bool has_stage(int n) const;
};

CarpetSpec odd_reciprocal_spec(int explicit_terms = 0);

struct SpecDiagnostics {
  std::vector<Rational> square_sums;  // sum_{i<=n} a_i^2
  std::vector<Rational> r;            // r_n = delta_{n-1} / a_n
  bool r_decreasing = true;           // strictly decreasing over the listed range
  bool r_to_zero = false;             // known to tend to 0 (generator) or decreasing
  bool square_summable = false;       // a in l^2, known only with a generator
  std::vector<std::string> notes;
};

struct CheckedSpec {
  CarpetSpec spec;
  SpecDiagnostics diagnostics;
};

// Errors: NonOddReciprocal(i), RatioOutOfRange(i), 1-based.
CheckedSpec validate_spec(const CarpetSpec& spec);

Rational delta(const CarpetSpec& spec, int n);
Rational epsilon(const CarpetSpec& spec, int n);

// Surviving level-n squares, prod_{i<=n} ((1/a_i)^2 - 1).
Integer square_count(const CarpetSpec& spec, int n);

// Whether the level-k square with lower-left corner (ix, iy) * delta_k
// survives in S_{a,k}.
bool square_survives(const CarpetSpec& spec, int k, std::int64_t ix, std::int64_t iy);

// Surviving level-m squares as lower-left index pairs (times delta_m),
// row-major.
void for_each_square(const CarpetSpec& spec, int m,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

struct Hole {
  int stage = 0;
  Point center;
  Rational side;
};

// Row-major over the level-(n-1) squares (bottom row first).
void for_each_hole(const CarpetSpec& spec, int n, const std::function<void(const Hole&)>& fn);
std::vector<Hole> enumerate_holes(const CarpetSpec& spec, int n);

Rational prefractal_measure(const CarpetSpec& spec, int m);

struct CellGrid {
  int stage = 0;
  std::vector<Rational> x_cuts;
  std::vector<Rational> y_cuts;

  std::size_t columns() const { return x_cuts.size() + 1; }
  std::size_t rows() const { return y_cuts.size() + 1; }
  std::size_t size() const { return columns() * rows(); }
  // Column edges: 0, x_cuts..., 1.
  Rational x_edge(std::size_t i) const;
  Rational y_edge(std::size_t j) const;
  // Row-major index k = row * columns() + column.
  Box cell(std::size_t k) const;
  Point center(std::size_t k) const;
  // Half-open convention [lo, hi) except at the top/right of the unit square.
  std::size_t locate(const Point& p) const;
};

CellGrid cell_grid(const CarpetSpec& spec, int n);

struct TailInterval {
  Rational lower;
  Rational upper;
};

// Bounds on prod_{i>m} (1 - a_i^2). Errors: TailDiverges.
TailInterval tail_measure_bounds(const CarpetSpec& spec, int m);

}  // namespace carpet
