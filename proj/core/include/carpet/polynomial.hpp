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

#include <array>

#include "carpet/rational.hpp"

namespace carpet {

// Bivariate polynomial of total degree <= 2, coefficients in the monomial
// order 1, x, y, x^2, xy, y^2.
class Poly2 {
 public:
  Poly2() = default;
  static Poly2 constant(Rational c);
  static Poly2 affine(Rational c0, Rational cx, Rational cy);
  static Poly2 x() { return affine(0, 1, 0); }
  static Poly2 y() { return affine(0, 0, 1); }

  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }

  // -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }

  Rational operator()(const Rational& x, const Rational& y) const;
  Poly2 dx() const;
  Poly2 dy() const;

  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Rational& s, const Poly2& p);
  // Throws DegreeOverflow when deg a + deg b > 2.
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2 operator-() const;
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }

 private:
  std::array<Rational, 6> c_{};
};

}  // namespace carpet
