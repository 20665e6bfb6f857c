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

#include "carpet/serialize.hpp"

#include "json_util.hpp"

namespace carpet {

namespace {

using detail::Json;

Json poly_json(const Poly2& p) {
  Json out = Json::array();
  for (int i = 0; i < 6; ++i) out.push_back(detail::rational_json(p[i]));
  return out;
}

Json field_doc(const ScalarField& f) {
  Json patches = Json::array();
  for (const auto& p : f.patches()) {
    Json e;
    e["region"] = detail::region_json(p.region);
    e["value"] = poly_json(p.value);
    patches.push_back(std::move(e));
  }
  Json doc;
  doc["basis"] = {"1", "x", "y", "x^2", "xy", "y^2"};
  doc["continuous"] = f.continuous;
  doc["patches"] = std::move(patches);
  return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string holes_json(const CarpetSpec& spec, int m) {
  Json holes = Json::array();
  for (int n = 1; n <= m; ++n) {
    for_each_hole(spec, n, [&](const Hole& h) {
      Json e;
      e["stage"] = h.stage;
      e["center"] = detail::point_json(h.center);
      e["side"] = detail::rational_json(h.side);
      holes.push_back(std::move(e));
    });
  }
  Json ratios = Json::array();
  for (int i = 1; i <= m; ++i) ratios.push_back(detail::rational_json(spec.ratio(i)));
  Json doc;
  doc["depth"] = m;
  doc["ratios"] = std::move(ratios);
  doc["generator"] = generator_name(spec.generator);
  doc["measure"] = detail::rational_json(prefractal_measure(spec, m));
  doc["holes"] = std::move(holes);
  return dump(doc);
}

std::string field_json(const ScalarField& f) { return dump(field_doc(f)); }

std::string vector_field_json(const VectorField& v) {
  Json patches = Json::array();
  for (const auto& p : v.patches()) {
    Json e;
    e["region"] = detail::region_json(p.region);
    e["u1"] = poly_json(p.u1);
    e["u2"] = poly_json(p.u2);
    patches.push_back(std::move(e));
  }
  Json doc;
  doc["basis"] = {"1", "x", "y", "x^2", "xy", "y^2"};
  doc["patches"] = std::move(patches);
  return dump(doc);
}

std::string form_json(const OneForm& w) {
  Json terms = Json::array();
  for (const auto& t : w.terms) terms.push_back({{"g", field_doc(t.g)}, {"f", field_doc(t.f)}});
  Json doc;
  doc["degree"] = 1;
  doc["terms"] = std::move(terms);
  return dump(doc);
}

std::string form_json(const TwoForm& x) {
  Json terms = Json::array();
  for (const auto& t : x.terms) terms.push_back({{"h", field_doc(t.h)}, {"f", field_doc(t.f)}, {"g", field_doc(t.g)}});
  Json doc;
  doc["degree"] = 2;
  doc["terms"] = std::move(terms);
  return dump(doc);
}

}  // namespace carpet
