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

#include "carpet/polynomial.hpp"

#include "carpet/error.hpp"

namespace carpet {

Poly2 Poly2::constant(Rational c) {
  Poly2 p;
  p.c_[0] = std::move(c);
  return p;
}

Poly2 Poly2::affine(Rational c0, Rational cx, Rational cy) {
  Poly2 p;
  p.c_[0] = std::move(c0);
  p.c_[1] = std::move(cx);
  p.c_[2] = std::move(cy);
  return p;
}

int Poly2::degree() const {
  if (c_[3] != 0 || c_[4] != 0 || c_[5] != 0) return 2;
  if (c_[1] != 0 || c_[2] != 0) return 1;
  if (c_[0] != 0) return 0;
  return -1;
}

Rational Poly2::operator()(const Rational& x, const Rational& y) const {
  Rational v = c_[0] + c_[1] * x + c_[2] * y;
  if (c_[3] != 0 || c_[4] != 0 || c_[5] != 0) v += c_[3] * x * x + c_[4] * x * y + c_[5] * y * y;
  return v;
}

Poly2 Poly2::dx() const { return affine(c_[1], 2 * c_[3], c_[4]); }

Poly2 Poly2::dy() const { return affine(c_[2], c_[4], 2 * c_[5]); }

Poly2 operator+(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (int i = 0; i < 6; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (int i = 0; i < 6; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

Poly2 operator*(const Rational& s, const Poly2& p) {
  Poly2 r;
  if (s == 0) return r;
  for (int i = 0; i < 6; ++i) r.c_[i] = s * p.c_[i];
  return r;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  int da = a.degree();
  int db = b.degree();
  if (da < 0 || db < 0) return Poly2();
  if (da + db > 2) throw CarpetError(ErrorCode::DegreeOverflow, "product exceeds degree 2");
  if (da == 0) return a.c_[0] * b;
  if (db == 0) return b.c_[0] * a;
  // both affine
  Poly2 r;
  r.c_[0] = a.c_[0] * b.c_[0];
  r.c_[1] = a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0];
  r.c_[2] = a.c_[0] * b.c_[2] + a.c_[2] * b.c_[0];
  r.c_[3] = a.c_[1] * b.c_[1];
  r.c_[4] = a.c_[1] * b.c_[2] + a.c_[2] * b.c_[1];
  r.c_[5] = a.c_[2] * b.c_[2];
  return r;
}

Poly2 Poly2::operator-() const {
  Poly2 r;
  for (int i = 0; i < 6; ++i) r.c_[i] = -c_[i];
  return r;
}

}  // namespace carpet
