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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "carpet/commands.hpp"
#include "carpet/error.hpp"

namespace {

struct Flags {
  std::string config_file;
  std::map<std::string, std::string> settings;
};

void add_flags(CLI::App* sub, Flags& flags) {
  sub->add_option("config", flags.config_file, "config file with `key = value` lines");
  const std::pair<const char*, const char*> keys[] = {
      {"ratios", "comma-separated ratios, e.g. 1/3,1/5,1/7"},
      {"generator", "none | odd-reciprocal | constant"},
      {"depth", "prefractal depth m"},
      {"nmax", "largest stage n"},
      {"mode", "exact | f64"},
      {"f", "const | x | y | affine:a,b,c"},
      {"out", "output directory"},
      {"stage", "figure stage (default nmax)"},
  };
  for (const auto& [key, help] : keys) {
    std::string name = std::string("--") + key;
    sub->add_option_function<std::string>(
        name, [&flags, k = std::string(key)](const std::string& v) { flags.settings[k] = v; }, help);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"carpetcurl: carpets, counterexample fields and bound checks"};
  app.require_subcommand(1);
  Flags flags;
  auto* carpet = app.add_subcommand("carpet", "render S_{a,m} as SVG and JSON");
  auto* figures = app.add_subcommand("figures", "cell, phi, psi and neighborhood SVGs");
  auto* verify = app.add_subcommand("verify", "run the bound checks and write reports");
  auto* spec_check = app.add_subcommand("spec-check", "validate a ratio sequence");
  for (auto* sub : {carpet, figures, verify, spec_check}) add_flags(sub, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : carpet::exit_config_error;
  }

  try {
    carpet::RunConfig config;
    if (!flags.config_file.empty()) config = carpet::load_config(flags.config_file);
    // ratios reset the generator, so an explicit --generator goes last
    for (const auto& [key, value] : flags.settings)
      if (key != "generator") carpet::apply_setting(config, key, value);
    if (auto g = flags.settings.find("generator"); g != flags.settings.end())
      carpet::apply_setting(config, g->first, g->second);

    if (carpet->parsed()) return carpet::cmd_carpet(config, std::cout);
    if (figures->parsed()) return carpet::cmd_figures(config, std::cout);
    if (verify->parsed()) return carpet::cmd_verify(config, std::cout);
    return carpet::cmd_spec_check(config, std::cout);
  } catch (const carpet::CarpetError& e) {
    std::cerr << e.what() << '\n';
    return e.code() == carpet::ErrorCode::ConfigError ? carpet::exit_config_error : carpet::exit_bound_failed;
  }
}
