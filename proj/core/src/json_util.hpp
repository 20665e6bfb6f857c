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

// JSON encodings shared by the report and geometry writers.

#pragma once

#include <json.hpp>

#include "carpet/polygon.hpp"
#include "carpet/rational.hpp"
#include "carpet/value.hpp"

namespace carpet::detail {

using Json = nlohmann::ordered_json;

// [num, den]; components that overflow int64 are written as decimal strings.
inline Json rational_json(const Rational& q) {
  auto part = [](const Integer& z) -> Json {
    if (auto v = to_int64(z)) return *v;
    return z.get_str();
  };
  return Json::array({part(q.get_num()), part(q.get_den())});
}

inline Json value_json(const Value& v) {
  if (v.exact()) return rational_json(v.rational());
  return to_string(v);
}

inline Json point_json(const Point& p) {
  Json out = rational_json(p.x);
  for (auto& c : rational_json(p.y)) out.push_back(c);
  return out;
}

inline Json region_json(const PolyRegion& r) {
  Json out = Json::array();
  for (const auto& p : r.vertices()) out.push_back(point_json(p));
  return out;
}

}  // namespace carpet::detail
