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

#include "carpet/report.hpp"

#include <sstream>

#include "json_util.hpp"

namespace carpet {

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::eq: return "==";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
    case Relation::info: return "";
  }
  return "";
}

bool holds(const Value& v, const Value& bound, Relation r) {
  switch (r) {
    case Relation::le: return v <= bound;
    case Relation::lt: return v < bound;
    case Relation::eq: return v == bound;
    case Relation::ge: return v >= bound;
    case Relation::gt: return v > bound;
    case Relation::info: return true;
  }
  return true;
}

ReportRow& VerificationReport::add(std::string section, int n, std::string quantity, Value value,
                                   std::optional<Value> bound, Relation relation, bool gating,
                                   std::string note) {
  ReportRow row;
  row.section = std::move(section);
  row.n = n;
  row.quantity = std::move(quantity);
  row.value = std::move(value);
  row.bound = std::move(bound);
  row.relation = relation;
  if (row.bound && relation != Relation::info) row.pass = holds(row.value, *row.bound, relation);
  row.gating = gating;
  row.note = std::move(note);
  rows.push_back(std::move(row));
  return rows.back();
}

ReportRow& VerificationReport::add_flag(std::string section, int n, std::string quantity, Value value,
                                        bool pass, bool gating, std::string note) {
  ReportRow& row = add(std::move(section), n, std::move(quantity), std::move(value), std::nullopt,
                       Relation::info, gating, std::move(note));
  row.pass = pass;
  return row;
}

void VerificationReport::append(const VerificationReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

bool VerificationReport::all_pass() const {
  for (const auto& r : rows) {
    if (r.gating && r.pass && !*r.pass) return false;
  }
  return true;
}

const ReportRow* VerificationReport::find(const std::string& section, int n, const std::string& quantity) const {
  for (const auto& r : rows) {
    if (r.section == section && r.n == n && r.quantity == quantity) return &r;
  }
  return nullptr;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

const char* pass_text(const std::optional<bool>& p) {
  if (!p) return "";
  return *p ? "pass" : "fail";
}

}  // namespace

std::string report_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "section,n,quantity,value,bound,relation,pass,gating,note,tail_lower,tail_upper\n";
  for (const auto& r : report.rows) {
    out << csv_field(r.section) << ',' << r.n << ',' << csv_field(r.quantity) << ',' << to_string(r.value) << ','
        << (r.bound ? to_string(*r.bound) : "") << ',' << relation_symbol(r.relation) << ',' << pass_text(r.pass)
        << ',' << (r.gating ? "yes" : "no") << ',' << csv_field(r.note) << ','
        << (r.tail ? to_string(r.tail->lower) : "") << ',' << (r.tail ? to_string(r.tail->upper) : "") << '\n';
  }
  return out.str();
}

std::string report_json(const VerificationReport& report) {
  using detail::Json;
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["section"] = r.section;
    row["n"] = r.n;
    row["quantity"] = r.quantity;
    row["value"] = detail::value_json(r.value);
    row["bound"] = r.bound ? detail::value_json(*r.bound) : Json(nullptr);
    row["relation"] = relation_symbol(r.relation);
    row["pass"] = r.pass ? Json(*r.pass) : Json(nullptr);
    row["gating"] = r.gating;
    row["note"] = r.note;
    if (r.tail) {
      row["tail"] = {{"lower", detail::rational_json(r.tail->lower)}, {"upper", detail::rational_json(r.tail->upper)}};
    } else {
      row["tail"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  Json doc;
  doc["mode"] = arithmetic_name(report.mode);
  doc["all_pass"] = report.all_pass();
  doc["warnings"] = report.warnings;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace carpet
