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

#include "carpet/forms.hpp"

#include <algorithm>
#include <functional>

#include "carpet/error.hpp"

namespace carpet {

namespace {

const ScalarField& unit() {
  static const ScalarField one = ScalarField::on_unit_square(Poly2::constant(1));
  return one;
}

Poly2 gamma_poly(const Poly2& f, const Poly2& g) { return f.dx() * g.dx() + f.dy() * g.dy(); }

// Common refinement of the distinct partitions among `fields`; slot[i] is the
// partition index of fields[i].
struct Refinement {
  std::vector<RefinedCell> cells;
  std::vector<std::size_t> slot;
};

Refinement refine_all(const std::vector<const ScalarField*>& fields) {
  Refinement r;
  std::vector<std::vector<PolyRegion>> partitions;
  for (const ScalarField* f : fields) {
    auto regions = f->regions();
    auto it = std::find(partitions.begin(), partitions.end(), regions);
    r.slot.push_back(static_cast<std::size_t>(it - partitions.begin()));
    if (it == partitions.end()) partitions.push_back(std::move(regions));
  }
  r.cells = overlay(partitions);
  return r;
}

const Poly2& value_in(const Refinement& r, const RefinedCell& c, const std::vector<const ScalarField*>& fields,
                      std::size_t i) {
  return fields[i]->patches()[c.source[r.slot[i]]].value;
}

Value integrate_cells(const Refinement& r, const Prefractal& pf,
                      const std::function<Poly2(const RefinedCell&)>& integrand) {
  if (pf.arithmetic() == Arithmetic::exact) {
    Rational total = 0;
    for (const auto& c : r.cells) {
      Poly2 p = integrand(c);
      if (!p.is_zero()) total += pf.integrate(p, c.region).rational();
    }
    return Value(total);
  }
  std::vector<double> parts;
  parts.reserve(r.cells.size());
  for (const auto& c : r.cells) {
    Poly2 p = integrand(c);
    parts.push_back(p.is_zero() ? 0.0 : pf.integrate(p, c.region).to_double());
  }
  return Value(pairwise_sum(parts));
}

template <class Form>
Form concat(const Form& a, const Form& b) {
  Form out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

}  // namespace

GammaDensity gamma(const ScalarField& f, const ScalarField& g) {
  auto cells = overlay(f.regions(), g.regions());
  std::vector<Patch> out;
  out.reserve(cells.size());
  for (auto& c : cells) {
    out.push_back({std::move(c.region), gamma_poly(f.patches()[c.source[0]].value, g.patches()[c.source[1]].value)});
  }
  return {ScalarField(std::move(out))};
}

Rational ess_sup(const GammaDensity& gm, const Prefractal& pf) {
  Rational best = 0;
  for (const auto& p : gm.density.patches()) {
    if (p.value.degree() > 0) throw CarpetError(ErrorCode::DegreeOverflow, "ess_sup needs a piecewise-constant density");
    Rational v = abs(p.value[0]);
    if (v > best && pf.region_measure(p.region) > Value(0)) best = v;
  }
  return best;
}

OneForm operator+(const OneForm& a, const OneForm& b) { return concat(a, b); }

OneForm operator-(const OneForm& a, const OneForm& b) {
  OneForm out = a;
  for (const auto& t : b.terms) out.terms.push_back({Rational(-1) * t.g, t.f});
  return out;
}

OneForm operator*(const ScalarField& h, const OneForm& w) {
  OneForm out;
  for (const auto& t : w.terms) out.terms.push_back({product(h, t.g), t.f});
  return out;
}

TwoForm operator+(const TwoForm& a, const TwoForm& b) { return concat(a, b); }

TwoForm operator-(const TwoForm& a, const TwoForm& b) {
  TwoForm out = a;
  for (const auto& t : b.terms) out.terms.push_back({Rational(-1) * t.h, t.f, t.g});
  return out;
}

TwoForm operator*(const ScalarField& h, const TwoForm& x) {
  TwoForm out;
  for (const auto& t : x.terms) out.terms.push_back({product(h, t.h), t.f, t.g});
  return out;
}

Value inner_H(const OneForm& a, const OneForm& b, const Prefractal& pf) {
  std::vector<const ScalarField*> fields;
  for (const auto* w : {&a, &b}) {
    for (const auto& t : w->terms) {
      fields.push_back(&t.g);
      fields.push_back(&t.f);
    }
  }
  if (a.terms.empty() || b.terms.empty()) return pf.arithmetic() == Arithmetic::exact ? Value(0) : Value(0.0);
  Refinement r = refine_all(fields);
  const std::size_t na = a.terms.size(), nb = b.terms.size();
  return integrate_cells(r, pf, [&](const RefinedCell& c) {
    Poly2 sum;
    for (std::size_t i = 0; i < na; ++i) {
      const Poly2& g1 = value_in(r, c, fields, 2 * i);
      const Poly2& f1 = value_in(r, c, fields, 2 * i + 1);
      for (std::size_t j = 0; j < nb; ++j) {
        const Poly2& g2 = value_in(r, c, fields, 2 * (na + j));
        const Poly2& f2 = value_in(r, c, fields, 2 * (na + j) + 1);
        Poly2 gm = gamma_poly(f1, f2);
        if (gm.is_zero() || g1.is_zero() || g2.is_zero()) continue;
        sum = sum + g1 * g2 * gm;
      }
    }
    return sum;
  });
}

Value inner_H2(const TwoForm& a, const TwoForm& b, const Prefractal& pf) {
  std::vector<const ScalarField*> fields;
  for (const auto* x : {&a, &b}) {
    for (const auto& t : x->terms) {
      fields.push_back(&t.h);
      fields.push_back(&t.f);
      fields.push_back(&t.g);
    }
  }
  if (a.terms.empty() || b.terms.empty()) return pf.arithmetic() == Arithmetic::exact ? Value(0) : Value(0.0);
  Refinement r = refine_all(fields);
  const std::size_t na = a.terms.size(), nb = b.terms.size();
  return integrate_cells(r, pf, [&](const RefinedCell& c) {
    Poly2 sum;
    for (std::size_t i = 0; i < na; ++i) {
      const Poly2& h1 = value_in(r, c, fields, 3 * i);
      const Poly2& f1 = value_in(r, c, fields, 3 * i + 1);
      const Poly2& g1 = value_in(r, c, fields, 3 * i + 2);
      if (h1.is_zero()) continue;
      for (std::size_t j = 0; j < nb; ++j) {
        const std::size_t k = 3 * (na + j);
        const Poly2& h2 = value_in(r, c, fields, k);
        const Poly2& f2 = value_in(r, c, fields, k + 1);
        const Poly2& g2 = value_in(r, c, fields, k + 2);
        if (h2.is_zero()) continue;
        Poly2 gram = gamma_poly(f1, f2) * gamma_poly(g1, g2) - gamma_poly(f1, g2) * gamma_poly(g1, f2);
        if (gram.is_zero()) continue;
        sum = sum + h1 * h2 * gram;
      }
    }
    return sum;
  });
}

OneForm d0(const ScalarField& f) { return {{{unit(), f}}}; }

TwoForm d1(const OneForm& w) {
  TwoForm out;
  for (const auto& t : w.terms) out.terms.push_back({unit(), t.g, t.f});
  return out;
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
  TwoForm out;
  for (const auto& s : a.terms) {
    for (const auto& t : b.terms) out.terms.push_back({product(s.g, t.g), s.f, t.f});
  }
  return out;
}

namespace {

void check_lemma_inputs(const Poly2& f, const Poly2& g) {
  if (f.degree() > 1) throw CarpetError(ErrorCode::DegreeOverflow, "f must be affine");
  if (!(g == Poly2::y())) throw CarpetError(ErrorCode::InvalidArgument, "the carpet instance approximates g = y only");
}

}  // namespace

OmegaN build_omega_n(const CarpetSpec& spec, int n, const Poly2& f, const Poly2& g, const Prefractal& pf) {
  check_lemma_inputs(f, g);
  ScalarField f_n = build_cell_cutoff(spec, n, [&](std::size_t, const Point& c) { return f - Poly2::constant(f(c.x, c.y)); });
  GnResult gn = build_g_n(spec, n);
  Value e = dirichlet_energy(ScalarField::on_unit_square(g) - gn.field, pf);
  Rational sup = sup_norm(f_n);
  OneForm omega{{{f_n, gn.field}}};
  return {std::move(omega), std::move(f_n), std::move(gn), std::move(sup), std::move(e)};
}

namespace {

// Patches of f - f_n that are not constant yet lie off every U piece.
std::size_t off_w_violations(const ScalarField& diff, const std::vector<BoundaryNeighborhood>& nbs) {
  std::size_t bad = 0;
  for (const auto& p : diff.patches()) {
    if (p.value.degree() <= 0) continue;
    Point c = p.region.centroid();
    bool in_w = false;
    for (const auto& nb : nbs) {
      for (const auto& [kind, region] : nb.pieces) {
        if (region.bbox().x0 <= c.x && c.x <= region.bbox().x1 && region.bbox().y0 <= c.y &&
            c.y <= region.bbox().y1 && region.contains(c)) {
          in_w = true;
        }
      }
      if (in_w) break;
    }
    bad += !in_w;
  }
  return bad;
}

}  // namespace

VerificationReport verify_lemma6(const CarpetSpec& spec, const Poly2& f, const Poly2& g, int n_max, int m,
                                 Arithmetic mode) {
  check_lemma_inputs(f, g);
  if (n_max < 1 || m < n_max) throw CarpetError(ErrorCode::InvalidArgument, "need 1 <= n_max <= m");
  validate_spec(spec);
  VerificationReport rep;
  rep.mode = mode;
  const std::string sec = "lemma6";
  Prefractal pf(spec, m, mode);

  const ScalarField F = ScalarField::on_unit_square(f);
  const ScalarField G = ScalarField::on_unit_square(g);
  const OneForm df = d0(F);
  const TwoForm target = wedge(df, d0(G));
  const Value wedge_norm = inner_H2(target, target, pf);
  const Rational b = f[1], c = f[2];
  rep.add(sec, 0, "wedge_norm", wedge_norm, Value(Rational(b * b * pf.measure())), Relation::eq, true,
          "||d0 f ∧ d0 g||^2 = f_x^2 lambda^2(S_m)");
  rep.add(sec, 0, "wedge_norm_positive", wedge_norm, Value(0), Relation::gt, true, "nonzero 2-form");
  if (spec.generator != Generator::none) {
    try {
      TailInterval tail = tail_measure_bounds(spec, m);
      auto& row = rep.add(sec, 0, "wedge_norm_tail_lower", wedge_norm * Value(tail.lower), Value(Rational(1, 2)),
                          Relation::gt, true, "||d0 f ∧ d0 g||^2 * tail lower bound > 1/2");
      row.tail = tail;
    } catch (const CarpetError& e) {
      rep.warnings.push_back(std::string("tail bound: ") + e.what());
    }
  }
  const Rational gamma_sup = ess_sup(gamma(F, F), pf);

  std::optional<Value> prev_omega, prev_first;
  for (int n = 1; n <= n_max; ++n) {
    const Rational dp = delta(spec, n - 1);
    OmegaN on = build_omega_n(spec, n, f, g, pf);
    const Value e_gn = on.energy_g_minus_gn;
    const Value omega_norm = inner_H(on.omega, on.omega, pf);
    rep.add(sec, n, "omega_norm", omega_norm, Value(Rational(on.f_n_sup * on.f_n_sup)) * dirichlet_energy(on.g_n.field, pf),
            Relation::le, true, "||omega_n||_H^2 <= (sup f_n)^2 E(g_n)");
    rep.add(sec, n, "fn_sup_sq", Rational(on.f_n_sup * on.f_n_sup), Value(Rational(2 * dp * dp * (b * b + c * c))), Relation::le, true,
            "(sup f_n)^2 <= (|grad f| sqrt(2) delta_{n-1})^2");
    rep.add(sec, n, "fn_sup_vs_1/n", on.f_n_sup, Value(Rational(1, n)), Relation::lt, false, "sup f_n < 1/n");
    rep.add(sec, n, "energy_g_minus_gn", e_gn, std::nullopt, Relation::info, false, "E(g - g_n)");

    const TwoForm dgn = wedge(df, d0(on.g_n.field));
    const TwoForm first = target - dgn;
    const Value first_defect = inner_H2(first, first, pf);
    rep.add(sec, n, "first_defect", first_defect, Value(Rational(2 * gamma_sup * gamma_sup)) * e_gn, Relation::le, true,
            "||df∧dg - df∧dg_n||^2 <= 2 ||Gamma(f)||_inf^2 E(g - g_n)");
    const TwoForm second = dgn - d1(on.omega);
    rep.add(sec, n, "second_defect", inner_H2(second, second, pf), Value(0), Relation::eq, true,
            "||df∧dg_n - d1 omega_n||^2 = 0");
    rep.add(sec, n, "constant_off_W_violations",
            Rational(static_cast<long>(off_w_violations(F - on.f_n, on.g_n.neighborhoods))), Value(0), Relation::eq,
            true, "f - f_n constant on each cell core");
    if (prev_omega) {
      rep.add(sec, n, "omega_norm_trend", omega_norm, *prev_omega, Relation::lt, false,
              "||omega_n||^2 < ||omega_{n-1}||^2");
    }
    if (prev_first) {
      rep.add(sec, n, "first_defect_trend", first_defect, *prev_first, Relation::lt, false,
              "first defect decreases");
    }
    prev_omega = omega_norm;
    prev_first = first_defect;
  }
  return rep;
}

}  // namespace carpet
