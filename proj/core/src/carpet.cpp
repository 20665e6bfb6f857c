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

#include "carpet/carpet.hpp"

#include <algorithm>
#include <set>

#include "carpet/error.hpp"

namespace carpet {

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::none: return "none";
    case Generator::odd_reciprocal: return "odd-reciprocal";
    case Generator::constant: return "constant";
  }
  return "none";
}

std::optional<Generator> parse_generator(const std::string& name) {
  if (name == "none" || name.empty()) return Generator::none;
  if (name == "odd-reciprocal") return Generator::odd_reciprocal;
  if (name == "constant") return Generator::constant;
  return std::nullopt;
}

Rational CarpetSpec::ratio(int i) const {
  if (i < 1) throw CarpetError(ErrorCode::InvalidArgument, "ratio index starts at 1", i);
  if (static_cast<std::size_t>(i) <= ratios.size()) return ratios[i - 1];
  switch (generator) {
    case Generator::odd_reciprocal: return Rational(1, 2 * i + 1);
    case Generator::constant:
      if (!ratios.empty()) return ratios.back();
      break;
    case Generator::none: break;
  }
  throw CarpetError(ErrorCode::StageBeyondSpec, "stage " + std::to_string(i) + " beyond spec", i);
}

long CarpetSpec::reciprocal(int i) const {
  Rational inv = 1 / ratio(i);
  return inv.get_num().get_si() / inv.get_den().get_si();
}

bool CarpetSpec::has_stage(int n) const {
  if (n <= static_cast<int>(ratios.size())) return true;
  if (generator == Generator::odd_reciprocal) return true;
  return generator == Generator::constant && !ratios.empty();
}

CarpetSpec odd_reciprocal_spec(int explicit_terms) {
  CarpetSpec s;
  for (int i = 1; i <= explicit_terms; ++i) s.ratios.emplace_back(1, 2 * i + 1);
  s.generator = Generator::odd_reciprocal;
  return s;
}

CheckedSpec validate_spec(const CarpetSpec& spec) {
  for (std::size_t k = 0; k < spec.ratios.size(); ++k) {
    const Rational& a = spec.ratios[k];
    long idx = static_cast<long>(k) + 1;
    if (a <= 0 || a > Rational(1, 3)) {
      throw CarpetError(ErrorCode::RatioOutOfRange, "ratio " + to_string(a) + " not in (0, 1/3]", idx);
    }
    Rational inv = 1 / a;
    if (!is_integer(inv) || inv.get_num() % 2 == 0) {
      throw CarpetError(ErrorCode::NonOddReciprocal, "a_" + std::to_string(idx) + " = " + to_string(a) + " is not 1/(odd integer)", idx);
    }
  }
  CheckedSpec out{spec, {}};
  auto& d = out.diagnostics;
  Rational sum = 0;
  Rational prev_delta = 1;
  const int listed = static_cast<int>(spec.ratios.size());
  for (int n = 1; n <= listed; ++n) {
    Rational a = spec.ratio(n);
    sum += a * a;
    d.square_sums.push_back(sum);
    d.r.push_back(prev_delta / a);
    prev_delta *= a;
  }
  for (std::size_t i = 1; i < d.r.size(); ++i) {
    if (!(d.r[i] < d.r[i - 1])) d.r_decreasing = false;
  }
  switch (spec.generator) {
    case Generator::odd_reciprocal:
      // r_n = (2n+1) / prod_{i<n} (2i+1) -> 0 and sum 1/(2n+1)^2 < inf
      d.square_summable = true;
      d.r_to_zero = true;
      break;
    case Generator::constant:
      // a constant ratio a <= 1/3 gives r_n = a^{n-2} -> 0 but sum a^2 = inf
      d.square_summable = false;
      d.r_to_zero = !spec.ratios.empty();
      d.notes.push_back("a is not square summable: the limit carpet has Lebesgue measure zero");
      break;
    case Generator::none:
      d.r_to_zero = d.r_decreasing;
      d.notes.push_back("finite ratio list: l2 membership and the limit of r_n are not determined");
      break;
  }
  if (!d.r_decreasing) d.notes.push_back("r_n is not strictly decreasing over the listed ratios");
  return out;
}

Rational delta(const CarpetSpec& spec, int n) {
  if (n < 0) throw CarpetError(ErrorCode::InvalidArgument, "negative stage", n);
  Rational d = 1;
  for (int i = 1; i <= n; ++i) d *= spec.ratio(i);
  return d;
}

Rational epsilon(const CarpetSpec& spec, int n) {
  if (n < 1) throw CarpetError(ErrorCode::InvalidArgument, "epsilon needs n >= 1", n);
  Rational prev = delta(spec, n - 1);
  return prev - prev * spec.ratio(n);
}

Integer square_count(const CarpetSpec& spec, int n) {
  Integer c = 1;
  for (int i = 1; i <= n; ++i) {
    long p = spec.reciprocal(i);
    c *= p * p - 1;
  }
  return c;
}

bool square_survives(const CarpetSpec& spec, int k, std::int64_t ix, std::int64_t iy) {
  for (int l = k; l >= 1; --l) {
    std::int64_t p = spec.reciprocal(l);
    std::int64_t mid = (p - 1) / 2;
    if (ix % p == mid && iy % p == mid) return false;
    ix /= p;
    iy /= p;
  }
  return true;
}

void for_each_hole(const CarpetSpec& spec, int n, const std::function<void(const Hole&)>& fn) {
  if (n < 1) throw CarpetError(ErrorCode::InvalidArgument, "holes start at stage 1", n);
  if (!spec.has_stage(n)) throw CarpetError(ErrorCode::StageBeyondSpec, "stage beyond spec", n);
  const Rational side_prev = delta(spec, n - 1);
  const Rational side = side_prev * spec.ratio(n);
  std::int64_t rows = 1;
  for (int i = 1; i < n; ++i) rows *= spec.reciprocal(i);
  Hole h;
  h.stage = n;
  h.side = side;
  for (std::int64_t iy = 0; iy < rows; ++iy) {
    for (std::int64_t ix = 0; ix < rows; ++ix) {
      if (!square_survives(spec, n - 1, ix, iy)) continue;
      h.center.x = (Rational(ix) + Rational(1, 2)) * side_prev;
      h.center.y = (Rational(iy) + Rational(1, 2)) * side_prev;
      fn(h);
    }
  }
}

void for_each_square(const CarpetSpec& spec, int m,
                     const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (m < 0) throw CarpetError(ErrorCode::InvalidArgument, "level must be >= 0", m);
  if (m > 0 && !spec.has_stage(m)) throw CarpetError(ErrorCode::StageBeyondSpec, "stage beyond spec", m);
  std::int64_t rows = 1;
  for (int i = 1; i <= m; ++i) rows *= spec.reciprocal(i);
  for (std::int64_t iy = 0; iy < rows; ++iy) {
    for (std::int64_t ix = 0; ix < rows; ++ix) {
      if (square_survives(spec, m, ix, iy)) fn(ix, iy);
    }
  }
}

std::vector<Hole> enumerate_holes(const CarpetSpec& spec, int n) {
  std::vector<Hole> out;
  for_each_hole(spec, n, [&](const Hole& h) { out.push_back(h); });
  return out;
}

Rational prefractal_measure(const CarpetSpec& spec, int m) {
  Rational p = 1;
  for (int i = 1; i <= m; ++i) {
    Rational a = spec.ratio(i);
    p *= 1 - a * a;
  }
  return p;
}

Rational CellGrid::x_edge(std::size_t i) const {
  if (i == 0) return 0;
  if (i > x_cuts.size()) return 1;
  return x_cuts[i - 1];
}

Rational CellGrid::y_edge(std::size_t j) const {
  if (j == 0) return 0;
  if (j > y_cuts.size()) return 1;
  return y_cuts[j - 1];
}

Box CellGrid::cell(std::size_t k) const {
  std::size_t i = k % columns();
  std::size_t j = k / columns();
  return {x_edge(i), y_edge(j), x_edge(i + 1), y_edge(j + 1)};
}

Point CellGrid::center(std::size_t k) const {
  Box b = cell(k);
  return {(b.x0 + b.x1) / 2, (b.y0 + b.y1) / 2};
}

std::size_t CellGrid::locate(const Point& p) const {
  auto index = [](const std::vector<Rational>& cuts, const Rational& v) {
    // number of cuts <= v, which puts a point on a cut into the upper cell
    return static_cast<std::size_t>(std::upper_bound(cuts.begin(), cuts.end(), v) - cuts.begin());
  };
  return index(y_cuts, p.y) * columns() + index(x_cuts, p.x);
}

CellGrid cell_grid(const CarpetSpec& spec, int n) {
  std::set<Rational> xs;
  std::set<Rational> ys;
  for_each_hole(spec, n, [&](const Hole& h) {
    xs.insert(h.center.x);
    ys.insert(h.center.y);
  });
  CellGrid g;
  g.stage = n;
  g.x_cuts.assign(xs.begin(), xs.end());
  g.y_cuts.assign(ys.begin(), ys.end());
  const Rational bound = 2 * delta(spec, n - 1) * delta(spec, n - 1);
  for (std::size_t k = 0; k < g.size(); ++k) {
    Box b = g.cell(k);
    Rational w = b.x1 - b.x0;
    Rational h = b.y1 - b.y0;
    if (w * w + h * h > bound) {
      throw CarpetError(ErrorCode::InvalidArgument, "cell diameter exceeds sqrt(2) delta_{n-1}",
                        static_cast<long>(k));
    }
  }
  return g;
}

TailInterval tail_measure_bounds(const CarpetSpec& spec, int m) {
  if (spec.generator == Generator::none) {
    throw CarpetError(ErrorCode::InvalidArgument, "tail bounds need a generator");
  }
  if (spec.generator == Generator::constant) {
    throw CarpetError(ErrorCode::TailDiverges, "constant ratios are not square summable");
  }
  const int listed = static_cast<int>(spec.ratios.size());
  Rational explicit_part = 1;
  for (int i = m + 1; i <= listed; ++i) {
    Rational a = spec.ratio(i);
    explicit_part *= 1 - a * a;
  }
  // sum_{i>K} 1/(2i+1)^2 <= integral_K^inf dx/(2x+1)^2 = 1/(2(2K+1))
  const int k = std::max(m, listed);
  Rational tail = Rational(1, 2 * (2 * k + 1));
  if (tail >= 1) throw CarpetError(ErrorCode::TailDiverges, "tail sum bound >= 1", m);
  return {explicit_part * (1 - tail), explicit_part};
}

}  // namespace carpet
