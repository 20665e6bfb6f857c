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

#include "carpet/config.hpp"

#include <fstream>
#include <sstream>

#include "carpet/error.hpp"

namespace carpet {

namespace {

[[noreturn]] void fail(const std::string& message, long index = -1) {
  throw CarpetError(ErrorCode::ConfigError, message, index);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  fail(key + ": not an integer: '" + value + "'");
}

Rational parse_coefficient(const std::string& text) {
  auto q = parse_rational(text);
  if (!q) fail("bad coefficient '" + text + "'");
  return *q;
}

}  // namespace

std::vector<Rational> parse_ratio_list(const std::string& text) {
  std::vector<Rational> out;
  long index = 1;
  for (const auto& item : split(text, ',')) {
    auto q = parse_rational(item);
    if (!q) fail("malformed ratio '" + item + "'", index);
    out.push_back(*q);
    ++index;
  }
  if (out.empty()) fail("empty ratio list");
  return out;
}

Arithmetic parse_mode(const std::string& text) {
  if (text == "exact") return Arithmetic::exact;
  if (text == "f64" || text == "binary64") return Arithmetic::binary64;
  fail("unknown mode '" + text + "'");
}

Poly2 parse_f(const std::string& text) {
  if (text == "const") return Poly2::constant(1);
  if (text == "x") return Poly2::x();
  if (text == "y") return Poly2::y();
  const std::string prefix = "affine:";
  if (text.rfind(prefix, 0) == 0) {
    auto parts = split(text.substr(prefix.size()), ',');
    if (parts.size() != 3) fail("affine needs three coefficients");
    return Poly2::affine(parse_coefficient(parts[0]), parse_coefficient(parts[1]), parse_coefficient(parts[2]));
  }
  fail("unknown test function '" + text + "'");
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "ratios") {
    config.spec.ratios = parse_ratio_list(value);
    config.spec.generator = Generator::none;
  } else if (key == "generator") {
    auto g = parse_generator(value);
    if (!g) fail("unknown generator '" + value + "'");
    config.spec.generator = *g;
  } else if (key == "depth") {
    config.depth = parse_int(key, value);
  } else if (key == "nmax") {
    config.n_max = parse_int(key, value);
  } else if (key == "mode") {
    config.mode = parse_mode(value);
  } else if (key == "f") {
    parse_f(value);
    config.f = value;
  } else if (key == "out") {
    config.out_dir = value;
  } else if (key == "stage") {
    config.stage = parse_int(key, value);
  } else {
    fail("unknown key '" + key + "'");
  }
}

RunConfig parse_config(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  // ratios reset the generator, so apply it last
  std::optional<std::string> generator;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) fail("line " + std::to_string(lineno) + ": expected key = value", lineno);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "generator") {
      generator = value;
    } else {
      apply_setting(base, key, value);
    }
  }
  if (generator) apply_setting(base, "generator", *generator);
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) fail("cannot read config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

void check_config(const RunConfig& config) {
  try {
    validate_spec(config.spec);
  } catch (const CarpetError& e) {
    fail(e.what(), e.index());
  }
  if (config.spec.ratios.empty() && config.spec.generator != Generator::odd_reciprocal)
    fail("no ratios given");
  if (config.n_max < 1) fail("nmax must be >= 1");
  if (config.depth < config.n_max) fail("depth must be >= nmax");
  if (!config.spec.has_stage(config.depth)) fail("depth beyond the ratio list", config.depth);
  int s = config.figure_stage();
  if (s < 1 || s > config.depth) fail("stage must be in 1..depth", s);
  if (config.out_dir.empty()) fail("empty output directory");
}

}  // namespace carpet
