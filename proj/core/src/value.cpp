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

#include "carpet/value.hpp"

#include <cstdio>

namespace carpet {

const char* arithmetic_name(Arithmetic mode) {
  return mode == Arithmetic::exact ? "exact" : "f64";
}

double Value::to_double() const {
  if (exact()) return rational().get_d();
  return std::get<double>(v_);
}

int Value::sign() const {
  if (exact()) return sgn(rational());
  double d = std::get<double>(v_);
  return (d > 0) - (d < 0);
}

Value operator+(const Value& a, const Value& b) {
  if (a.exact() && b.exact()) return Value(Rational(a.rational() + b.rational()));
  return Value(a.to_double() + b.to_double());
}

Value operator-(const Value& a, const Value& b) {
  if (a.exact() && b.exact()) return Value(Rational(a.rational() - b.rational()));
  return Value(a.to_double() - b.to_double());
}

Value operator*(const Value& a, const Value& b) {
  if (a.exact() && b.exact()) return Value(Rational(a.rational() * b.rational()));
  return Value(a.to_double() * b.to_double());
}

Value operator/(const Value& a, const Value& b) {
  if (a.exact() && b.exact()) return Value(Rational(a.rational() / b.rational()));
  return Value(a.to_double() / b.to_double());
}

Value Value::operator-() const {
  if (exact()) return Value(Rational(-rational()));
  return Value(-to_double());
}

std::string to_string(const Value& v) {
  if (v.exact()) return to_string(v.rational());
  char buf[40];
  std::snprintf(buf, sizeof buf, "f64:%.17g", v.to_double());
  return buf;
}

bool le_square_of_root_sum(const Value& v, const Value& a, const Value& b) {
  // v <= a + b + 2 sqrt(ab)  <=>  d <= 0 or d^2 <= 4ab, with d = v - a - b
  Value d = v - a - b;
  if (d.sign() <= 0) return true;
  return d * d <= Value(4) * a * b;
}

double pairwise_sum(const std::vector<double>& xs) {
  // iterative bottom-up pairing keeps the order fixed
  if (xs.empty()) return 0.0;
  std::vector<double> level = xs;
  while (level.size() > 1) {
    std::vector<double> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
    if (level.size() % 2 == 1) next.push_back(level.back());
    level.swap(next);
  }
  return level.front();
}

}  // namespace carpet
