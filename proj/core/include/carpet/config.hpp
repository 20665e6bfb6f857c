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

// Run configuration for the command-line front end.

#pragma once

#include <optional>
#include <string>

#include "carpet/carpet.hpp"
#include "carpet/polynomial.hpp"
#include "carpet/value.hpp"

namespace carpet {

struct RunConfig {
  CarpetSpec spec = odd_reciprocal_spec();
  int depth = 4;
  int n_max = 3;
  std::string f = "const";
  Arithmetic mode = Arithmetic::exact;
  std::string out_dir = ".";
  std::optional<int> stage;  // figure stage in 1..depth, defaults to n_max

  int figure_stage() const { return stage.value_or(n_max); }
};

// Keys: ratios, generator, depth, nmax, mode, f, out, stage. Throws
// CarpetError(ConfigError) on unknown keys or malformed values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

// `key = value` lines; '#' starts a comment.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

// "1/3, 1/5, 1/7"
std::vector<Rational> parse_ratio_list(const std::string& text);
Arithmetic parse_mode(const std::string& text);
// const | x | y | affine:a,b,c  (a + b x + c y)
Poly2 parse_f(const std::string& text);

// Spec validity and stage ranges; ConfigError otherwise.
void check_config(const RunConfig& config);

}  // namespace carpet
