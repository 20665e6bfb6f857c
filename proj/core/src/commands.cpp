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

#include "carpet/commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "carpet/counterexample.hpp"
#include "carpet/error.hpp"
#include "carpet/forms.hpp"
#include "carpet/serialize.hpp"
#include "carpet/svg.hpp"

namespace carpet {

namespace {

namespace fs = std::filesystem;

void write_file(const RunConfig& config, const std::string& name, const std::string& content, std::ostream& log) {
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  fs::path path = fs::path(config.out_dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CarpetError(ErrorCode::ConfigError, "cannot write " + path.string());
  out << content;
  if (!out) throw CarpetError(ErrorCode::ConfigError, "write failed: " + path.string());
  log << "wrote " << path.string() << '\n';
}

std::string cell(const ReportRow* row, bool bound) {
  if (!row) return "";
  if (bound) return row->bound ? to_string(*row->bound) : "";
  return to_string(row->value);
}

}  // namespace

int cmd_carpet(const RunConfig& config, std::ostream& log) {
  check_config(config);
  write_file(config, "carpet.svg", svg_carpet(config.spec, config.depth), log);
  write_file(config, "carpet.json", holes_json(config.spec, config.depth), log);
  log << "S_{a," << config.depth << "}: " << square_count(config.spec, config.depth).get_str() << " squares\n";
  return exit_pass;
}

int cmd_figures(const RunConfig& config, std::ostream& log) {
  check_config(config);
  int n = config.figure_stage();
  write_file(config, "cells.svg", svg_cells(config.spec, n), log);
  write_file(config, "phi.svg", svg_phi(config.spec, n), log);
  write_file(config, "psi.svg", svg_psi(config.spec, n), log);
  write_file(config, "unk.svg", svg_unk(config.spec, n), log);
  return exit_pass;
}

VerificationReport run_verification(const RunConfig& config) {
  check_config(config);
  Poly2 f = parse_f(config.f);
  VerificationReport rep =
      verify_theorem1(config.spec, ScalarField::on_unit_square(f), config.n_max, config.depth, config.mode);
  rep.append(verify_lemma6(config.spec, Poly2::x(), Poly2::y(), config.n_max, config.depth, config.mode));
  return rep;
}

std::string theorem1_table(const VerificationReport& report, int n_max) {
  std::ostringstream out;
  out << "n,energy_g_minus_phi,a_n,energy_psi,psi_bound,v_norm,curl_defect,pass\n";
  for (int n = 1; n <= n_max; ++n) {
    bool pass = true;
    for (const auto& row : report.rows) {
      if (row.section == "theorem1" && row.n == n && row.gating && row.pass && !*row.pass) pass = false;
    }
    auto find = [&](const char* q) { return report.find("theorem1", n, q); };
    out << n << ',' << cell(find("energy_g_minus_phi"), false) << ',' << cell(find("energy_g_minus_phi"), true)
        << ',' << cell(find("energy_psi"), false) << ',' << cell(find("energy_psi"), true) << ','
        << cell(find("v_norm"), false) << ',' << cell(find("curl_defect"), false) << ','
        << (pass ? "true" : "false") << '\n';
  }
  return out.str();
}

int cmd_verify(const RunConfig& config, std::ostream& log) {
  VerificationReport rep = run_verification(config);
  write_file(config, "report.csv", report_csv(rep), log);
  write_file(config, "report.json", report_json(rep), log);
  write_file(config, "theorem1.csv", theorem1_table(rep, config.n_max), log);
  for (const auto& w : rep.warnings) log << "warning: " << w << '\n';
  for (const auto& row : rep.rows) {
    if (row.gating && row.pass && !*row.pass)
      log << "FAIL " << row.section << " n=" << row.n << ' ' << row.quantity << ": " << to_string(row.value) << ' '
          << relation_symbol(row.relation) << ' ' << (row.bound ? to_string(*row.bound) : "") << '\n';
  }
  bool ok = rep.all_pass();
  log << (ok ? "all bounds pass" : "a bound failed") << '\n';
  return ok ? exit_pass : exit_bound_failed;
}

int cmd_spec_check(const RunConfig& config, std::ostream& log) {
  check_config(config);
  CheckedSpec checked = validate_spec(config.spec);
  const auto& d = checked.diagnostics;
  log << "generator: " << generator_name(config.spec.generator) << '\n';
  for (int i = 1; i <= config.depth; ++i) {
    log << "a_" << i << " = " << to_string(config.spec.ratio(i)) << "  delta_" << i << " = "
        << to_string(delta(config.spec, i)) << "  eps_" << i << " = " << to_string(epsilon(config.spec, i))
        << "  squares = " << square_count(config.spec, i).get_str() << '\n';
  }
  log << "measure S_{a," << config.depth << "} = " << to_string(prefractal_measure(config.spec, config.depth)) << '\n';
  log << "square summable: " << (d.square_summable ? "yes" : "no") << '\n';
  log << "r_n to zero: " << (d.r_to_zero ? "yes" : "no") << '\n';
  for (const auto& note : d.notes) log << "note: " << note << '\n';
  return exit_pass;
}

}  // namespace carpet
