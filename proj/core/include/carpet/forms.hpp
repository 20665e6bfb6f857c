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

#include <vector>

#include "carpet/counterexample.hpp"
#include "carpet/field.hpp"
#include "carpet/report.hpp"

namespace carpet {

// Gamma(f, g) = grad f . grad g on the overlay of f and g.
struct GammaDensity {
  ScalarField density;
};

GammaDensity gamma(const ScalarField& f, const ScalarField& g);

// Largest |Gamma| over patches meeting S_{a,m} in positive measure;
// piecewise-constant densities only. Errors: DegreeOverflow.
Rational ess_sup(const GammaDensity& gm, const Prefractal& pf);

// g d0 f
struct OneTerm {
  ScalarField g;
  ScalarField f;
};

struct OneForm {
  std::vector<OneTerm> terms;
};

// h d0 f ∧ d0 g
struct TwoTerm {
  ScalarField h;
  ScalarField f;
  ScalarField g;
};

struct TwoForm {
  std::vector<TwoTerm> terms;
};

OneForm operator+(const OneForm& a, const OneForm& b);
OneForm operator-(const OneForm& a, const OneForm& b);
OneForm operator*(const ScalarField& h, const OneForm& w);
TwoForm operator+(const TwoForm& a, const TwoForm& b);
TwoForm operator-(const TwoForm& a, const TwoForm& b);
TwoForm operator*(const ScalarField& h, const TwoForm& x);

// sum_ij int g_i g'_j Gamma(f_i, f'_j) dm over S_{a,m}.
Value inner_H(const OneForm& a, const OneForm& b, const Prefractal& pf);
// sum_ij int h_i h'_j (Gamma(f,f')Gamma(g,g') - Gamma(f,g')Gamma(g,f')) dm.
Value inner_H2(const TwoForm& a, const TwoForm& b, const Prefractal& pf);

// d0 f = 1 d0 f, with 1 on the unit square.
OneForm d0(const ScalarField& f);
// g d0 f -> d0 g ∧ d0 f
TwoForm d1(const OneForm& w);
// (g d0 f) ∧ (g' d0 f') = g g' d0 f ∧ d0 f'
TwoForm wedge(const OneForm& a, const OneForm& b);

struct OmegaN {
  OneForm omega;     // f_n d0 g_n
  ScalarField f_n;
  GnResult g_n;
  Rational f_n_sup;
  Value energy_g_minus_gn;
};

// f must be affine and g = y. f_n is the cell-local cutoff of f - f(center_k).
OmegaN build_omega_n(const CarpetSpec& spec, int n, const Poly2& f, const Poly2& g, const Prefractal& pf);

VerificationReport verify_lemma6(const CarpetSpec& spec, const Poly2& f, const Poly2& g, int n_max, int m,
                                 Arithmetic mode = Arithmetic::exact);

}  // namespace carpet
