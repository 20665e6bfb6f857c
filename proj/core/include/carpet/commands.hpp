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

// Subcommands behind the CLI. Each validates its config (ConfigError on
// failure), writes its files into config.out_dir and returns an exit code.

#pragma once

#include <iosfwd>
#include <string>

#include "carpet/config.hpp"
#include "carpet/report.hpp"

namespace carpet {

enum ExitCode : int { exit_pass = 0, exit_bound_failed = 1, exit_config_error = 2 };

// carpet.svg, carpet.json
int cmd_carpet(const RunConfig& config, std::ostream& log);
// cells.svg, phi.svg, psi.svg, unk.svg at figure_stage()
int cmd_figures(const RunConfig& config, std::ostream& log);
// report.csv, report.json, theorem1.csv
int cmd_verify(const RunConfig& config, std::ostream& log);
// Prints spec diagnostics; 0 for a valid spec.
int cmd_spec_check(const RunConfig& config, std::ostream& log);

// Theorem-1 and Lemma-6 rows for the config.
VerificationReport run_verification(const RunConfig& config);
// One line per n: n, E(g-phi_n), a_n, E(psi_n), B_n, ||v_n||^2, ||curl v_n - f||^2, pass.
std::string theorem1_table(const VerificationReport& report, int n_max);

}  // namespace carpet
