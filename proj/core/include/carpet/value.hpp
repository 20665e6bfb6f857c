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

#include <string>
#include <variant>
#include <vector>

#include "carpet/rational.hpp"

namespace carpet {

enum class Arithmetic { exact, binary64 };

const char* arithmetic_name(Arithmetic mode);

// A computed quantity: an exact rational, or a binary64 approximation when
// the prefractal runs in binary64 mode. Mixed arithmetic degrades to double.
class Value {
 public:
  Value() : v_(Rational(0)) {}
  Value(Rational q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  Value(double d) : v_(d) {}               // NOLINT(google-explicit-constructor)
  Value(int i) : v_(Rational(i)) {}        // NOLINT(google-explicit-constructor)

  bool exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  double to_double() const;
  int sign() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  friend Value operator/(const Value& a, const Value& b);
  Value operator-() const;
  Value& operator+=(const Value& b) { return *this = *this + b; }

  friend bool operator<(const Value& a, const Value& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Value& a, const Value& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const Value& a, const Value& b) { return (a - b).sign() > 0; }
  friend bool operator>=(const Value& a, const Value& b) { return (a - b).sign() >= 0; }
  friend bool operator==(const Value& a, const Value& b) { return (a - b).sign() == 0; }

 private:
  std::variant<Rational, double> v_;
};

std::string to_string(const Value& v);

// Exact test of v <= (sqrt(a) + sqrt(b))^2 for a, b >= 0, without square roots.
bool le_square_of_root_sum(const Value& v, const Value& a, const Value& b);

// Pairwise summation in a fixed order; used for every binary64 reduction.
double pairwise_sum(const std::vector<double>& xs);

}  // namespace carpet
