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

#include "carpet/carpet.hpp"
#include "carpet/forms.hpp"
#include "carpet/report.hpp"
#include "carpet/serialize.hpp"
#include "json.hpp"

using carpet::Arithmetic;
using carpet::CarpetSpec;
using carpet::Poly2;
using carpet::Rational;
using carpet::Relation;
using carpet::ScalarField;
using carpet::Value;
using carpet::VerificationReport;
using nlohmann::json;

namespace {

Rational q(long n, long d) { return carpet::make_rational(n, d); }

CarpetSpec spec(std::initializer_list<Rational> ratios) {
  CarpetSpec s;
  s.ratios.assign(ratios.begin(), ratios.end());
  return s;
}

Rational from_pair(const json& j) {
  auto part = [](const json& p) { return p.is_string() ? Rational(carpet::Integer(p.get<std::string>())) : Rational(p.get<long>()); };
  return part(j[0]) / part(j[1]);
}

TEST(Holds, Relations) {
  Value a(q(1, 3)), b(q(1, 2));
  EXPECT_TRUE(carpet::holds(a, b, Relation::le));
  EXPECT_TRUE(carpet::holds(a, b, Relation::lt));
  EXPECT_FALSE(carpet::holds(a, b, Relation::ge));
  EXPECT_TRUE(carpet::holds(a, a, Relation::eq));
  EXPECT_FALSE(carpet::holds(a, a, Relation::lt));
  EXPECT_TRUE(carpet::holds(Value(0.5), b, Relation::eq));
}

TEST(Report, PassFlagsAndGating) {
  VerificationReport r;
  r.add("s", 1, "a", Value(q(1, 3)), Value(q(1, 2)), Relation::le, true, "ok");
  r.add("s", 1, "b", Value(q(2, 3)), Value(q(1, 2)), Relation::le, false, "trend");
  r.add("s", 2, "c", Value(q(5, 1)), std::nullopt, Relation::info, false, "info");
  EXPECT_TRUE(r.all_pass());
  ASSERT_NE(r.find("s", 1, "b"), nullptr);
  EXPECT_FALSE(*r.find("s", 1, "b")->pass);
  EXPECT_FALSE(r.find("s", 2, "c")->pass.has_value());
  EXPECT_EQ(r.find("s", 3, "a"), nullptr);
  r.add("s", 2, "d", Value(q(1, 1)), Value(q(0, 1)), Relation::eq, true, "gate");
  EXPECT_FALSE(r.all_pass());
}

TEST(Report, CsvLayout) {
  VerificationReport r;
  r.add("t", 1, "q", Value(q(1, 3)), Value(q(1, 2)), Relation::le, true, "note, with comma");
  r.add("t", 1, "q2", Value(0.25), Value(q(1, 2)), Relation::gt, false, "x");
  std::string csv = carpet::report_csv(r);
  EXPECT_EQ(csv,
            "section,n,quantity,value,bound,relation,pass,gating,note,tail_lower,tail_upper\n"
            "t,1,q,1/3,1/2,<=,pass,yes,\"note, with comma\",,\n"
            "t,1,q2,f64:0.25,1/2,>,fail,no,x,,\n");
}

TEST(Report, JsonRationalsSurviveRoundTrip) {
  VerificationReport r;
  carpet::Integer big = carpet::Integer(1) << 70;
  Rational huge(big, 3);
  r.add("t", 0, "big", Value(huge), Value(Rational(huge + 1)), Relation::lt, true, "");
  r.add("t", 0, "small", Value(q(-7, 9)), std::nullopt, Relation::info, false, "");
  json j = json::parse(carpet::report_json(r));
  EXPECT_EQ(j["mode"], "exact");
  EXPECT_EQ(j["all_pass"], true);
  EXPECT_TRUE(j["rows"][0]["value"][0].is_string());
  EXPECT_EQ(from_pair(j["rows"][0]["value"]), huge);
  EXPECT_EQ(from_pair(j["rows"][0]["bound"]), huge + 1);
  EXPECT_EQ(from_pair(j["rows"][1]["value"]), q(-7, 9));
  EXPECT_TRUE(j["rows"][1]["bound"].is_null());
}

TEST(HolesJson, MatchesEnumeration) {
  CarpetSpec s = spec({q(1, 3), q(1, 5)});
  json j = json::parse(carpet::holes_json(s, 2));
  auto holes = carpet::enumerate_holes(s, 1);
  auto holes2 = carpet::enumerate_holes(s, 2);
  ASSERT_EQ(j["holes"].size(), holes.size() + holes2.size());
  EXPECT_EQ(j["holes"].size(), 9u);  // 1 + 8
  EXPECT_EQ(from_pair(j["measure"]), carpet::prefractal_measure(s, 2));
  EXPECT_EQ(from_pair(j["measure"]), q(64, 75));
  const json& first = j["holes"][0];
  EXPECT_EQ(first["stage"], 1);
  EXPECT_EQ(from_pair({first["center"][0], first["center"][1]}), q(1, 2));
  EXPECT_EQ(from_pair(first["side"]), q(1, 3));
  // every stage-2 hole lies inside a surviving level-1 square
  for (const auto& h : j["holes"]) {
    if (h["stage"] != 2) continue;
    EXPECT_EQ(from_pair(h["side"]), q(1, 15));
    Rational cx = from_pair({h["center"][0], h["center"][1]});
    Rational cy = from_pair({h["center"][2], h["center"][3]});
    EXPECT_FALSE(cx > q(1, 3) && cx < q(2, 3) && cy > q(1, 3) && cy < q(2, 3));
  }
}

TEST(FieldJson, CoefficientsInBasisOrder) {
  ScalarField f = ScalarField::on_unit_square(Poly2::affine(1, q(1, 2), q(-2, 3)));
  json j = json::parse(carpet::field_json(f));
  EXPECT_EQ(j["basis"], json({"1", "x", "y", "x^2", "xy", "y^2"}));
  ASSERT_EQ(j["patches"].size(), 1u);
  const json& v = j["patches"][0]["value"];
  EXPECT_EQ(from_pair(v[0]), 1);
  EXPECT_EQ(from_pair(v[1]), q(1, 2));
  EXPECT_EQ(from_pair(v[2]), q(-2, 3));
  EXPECT_EQ(j["patches"][0]["region"].size(), 4u);
}

TEST(FormJson, TermsCarryFields) {
  ScalarField one = ScalarField::on_unit_square(Poly2::constant(1));
  ScalarField x = ScalarField::on_unit_square(Poly2::x());
  json w = json::parse(carpet::form_json(carpet::d0(x)));
  ASSERT_EQ(w["terms"].size(), 1u);
  json two = json::parse(carpet::form_json(carpet::wedge(carpet::d0(x), carpet::d0(one))));
  ASSERT_EQ(two["terms"].size(), 1u);
}

TEST(Serialize, Deterministic) {
  CarpetSpec s = spec({q(1, 3), q(1, 5), q(1, 7)});
  EXPECT_EQ(carpet::holes_json(s, 3), carpet::holes_json(s, 3));
}

}  // namespace
