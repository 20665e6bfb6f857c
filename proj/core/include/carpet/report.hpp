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

#include <optional>
#include <string>
#include <vector>

#include "carpet/carpet.hpp"
#include "carpet/value.hpp"

namespace carpet {

enum class Relation { le, lt, eq, ge, gt, info };

const char* relation_symbol(Relation r);

struct ReportRow {
  std::string section;
  int n = 0;
  std::string quantity;
  Value value;
  std::optional<Value> bound;
  Relation relation = Relation::info;
  std::optional<bool> pass;
  bool gating = true;
  std::string note;
  std::optional<TailInterval> tail;
};

struct VerificationReport {
  Arithmetic mode = Arithmetic::exact;
  std::vector<ReportRow> rows;
  std::vector<std::string> warnings;

  // Appends a row; pass is derived from the relation unless given.
  ReportRow& add(std::string section, int n, std::string quantity, Value value, std::optional<Value> bound,
                 Relation relation, bool gating = true, std::string note = {});
  // Row with an externally decided pass flag.
  ReportRow& add_flag(std::string section, int n, std::string quantity, Value value, bool pass,
                      bool gating = true, std::string note = {});
  void append(const VerificationReport& other);

  // Every gating row with a pass flag passes.
  bool all_pass() const;
  const ReportRow* find(const std::string& section, int n, const std::string& quantity) const;
};

bool holds(const Value& v, const Value& bound, Relation r);

std::string report_csv(const VerificationReport& report);
std::string report_json(const VerificationReport& report);

}  // namespace carpet
