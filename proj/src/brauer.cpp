#include "bmo/brauer.hpp"

#include <algorithm>
#include <set>

#include "bmo/errors.hpp"
#include "bmo/sampling.hpp"

namespace bmo {

Polynomial example_p() {
  const Polynomial t = Polynomial::t();
  return Polynomial(3) * (t - Polynomial(1)).pow(3) * (t + Polynomial(3));
}

Polynomial example_q() { return example_p().reflected(); }

SplitCurve example_curve() { return SplitCurve::make(example_p(), example_q()); }

BrauerClass build_class_A() {
  const Polynomial t = Polynomial::t();
  const Polynomial f = Polynomial(6) * t * (t + Polynomial(1));
  const Polynomial g = Polynomial(6) * t * (t - Polynomial(1));
  return gamma(f, g, example_curve());
}

std::string SurfacePoint::to_string() const {
  if (zero_section_) return "O @ " + place_.to_string();
  return "(t, x) = (" + bmo::to_string(t0_) + ", " + bmo::to_string(x0_) + ") @ " +
         place_.to_string();
}

namespace {

struct FiberValues {
  Rational p, q;
};

std::optional<FiberValues> fiber_values(const SplitCurve& curve, const Rational& t0) {
  auto p = curve.p(t0);
  auto q = curve.q(t0);
  if (!p || !q) return std::nullopt;
  return FiberValues{*p, *q};
}

Rational value_of(CurveFunction u, const Rational& x0, const FiberValues& fv) {
  switch (u) {
    case CurveFunction::X: return x0;
    case CurveFunction::XMinusP: return x0 - fv.p;
    case CurveFunction::XMinusQ: return x0 - fv.q;
  }
  return 0;
}

// u * substitute(u) = x(x - p)(x - q), a square on the curve.
Rational substitute_of(CurveFunction u, const Rational& x0, const FiberValues& fv) {
  switch (u) {
    case CurveFunction::X: return (x0 - fv.p) * (x0 - fv.q);
    case CurveFunction::XMinusP: return x0 * (x0 - fv.q);
    case CurveFunction::XMinusQ: return x0 * (x0 - fv.p);
  }
  return 0;
}

// Symbol arguments at an affine point, after substitution.
std::vector<std::pair<Rational, Rational>> symbol_arguments(const BrauerClass& c,
                                                            const Rational& t0,
                                                            const Rational& x0,
                                                            const FiberValues& fv) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& s : c.symbols()) {
    Rational a = value_of(s.u, x0, fv);
    if (a == 0) a = substitute_of(s.u, x0, fv);
    if (a == 0) {
      throw DegeneratePoint(bmo::to_string(s.u) + " and its substitute vanish at (t, x) = (" +
                            bmo::to_string(t0) + ", " + bmo::to_string(x0) + ")");
    }
    auto b = s.f(t0);
    if (!b || *b == 0) {
      throw DegeneratePoint(s.f.to_string() + " has a zero or pole at t = " + bmo::to_string(t0));
    }
    out.emplace_back(std::move(a), std::move(*b));
  }
  return out;
}

FiberValues require_fiber(const SplitCurve& curve, const Rational& t0) {
  auto fv = fiber_values(curve, t0);
  if (!fv) throw DegeneratePoint("p or q has a pole at t = " + bmo::to_string(t0));
  return *fv;
}

void add_rational_roots(const Polynomial& f, std::set<Rational, CanonicalLess>& out) {
  if (f.is_zero() || f.degree() < 1) return;
  for (const auto& [g, e] : poly_factor(f).factors) {
    if (g.degree() == 1) out.insert(-g.coefficient(0));
  }
}

}  // namespace

bool on_curve_locally(const SplitCurve& curve, const Rational& t0, const Rational& x0,
                      const RationalPlace& v) {
  auto fv = fiber_values(curve, t0);
  if (!fv) return false;
  const Rational rhs = x0 * (x0 - fv->p) * (x0 - fv->q);
  return rhs == 0 || qp_is_square(rhs, v);
}

SymbolValue evaluate_local(const BrauerClass& c, const SurfacePoint& m) {
  // Every x - e has a pole of even order along the zero section with a
  // square leading coefficient, so each symbol is trivial there.
  if (m.is_zero_section()) return SymbolValue::from_sign(1);
  const FiberValues fv = require_fiber(c.curve(), m.t0());
  if (!on_curve_locally(c.curve(), m.t0(), m.x0(), m.place())) {
    throw InvalidArgument(m.to_string() + " is not a local point of the surface");
  }
  SymbolValue total = SymbolValue::from_sign(1);
  for (const auto& [a, b] : symbol_arguments(c, m.t0(), m.x0(), fv)) {
    total = total * hilbert_symbol(a, b, m.place());
  }
  return total;
}

ObstructionReport adelic_pairing(const BrauerClass& c, const AdelicPointSpec& spec) {
  ObstructionReport report;
  for (const auto& [place, point] : spec.overrides) {
    if (point.place() != place) {
      throw InvalidArgument("point " + point.to_string() + " listed under place " +
                            place.to_string());
    }
    SymbolValue inv = evaluate_local(c, point);
    report.sum = report.sum * inv;
    report.entries.push_back({place, point, inv});
  }
  return report;
}

AdelicPointSpec example_adelic_point() {
  AdelicPointSpec spec;
  const RationalPlace two = RationalPlace::prime(2);
  spec.overrides.emplace(two, SurfacePoint::affine(2, 1, two));
  return spec;
}

namespace {

std::vector<Rational> excluded_parameters(const BrauerClass& c) {
  std::set<Rational, CanonicalLess> out;
  const auto& curve = c.curve();
  for (const RationalFunction& f : {curve.p, curve.q, curve.p - curve.q}) {
    add_rational_roots(f.numerator(), out);
    add_rational_roots(f.denominator(), out);
  }
  for (const auto& s : c.symbols()) {
    add_rational_roots(s.f.numerator(), out);
    add_rational_roots(s.f.denominator(), out);
  }
  return {out.begin(), out.end()};
}

}  // namespace

SamplingReport sample_vanishing(const BrauerClass& c, const RationalPlace& place, int samples,
                                int max_height) {
  if (samples < 0) throw InvalidArgument("negative sample count");
  if (max_height < 1) throw InvalidArgument("height bound must be positive");
  SamplingReport report;
  report.place = place;
  report.height = max_height;
  report.requested = samples;
  report.excluded_t = excluded_parameters(c);

  constexpr std::size_t kChunk = 4096;
  for (int h = 1; h <= max_height && report.valid < samples; ++h) {
    const auto layer = candidates_of_height(h, report.excluded_t);
    for (std::size_t start = 0; start < layer.size() && report.valid < samples; start += kChunk) {
      const std::size_t len = std::min(kChunk, layer.size() - start);
      const std::span<const SampleCandidate> batch(layer.data() + start, len);
      const auto outcomes = evaluate_candidates_parallel(c, place, batch);
      for (std::size_t i = 0; i < len && report.valid < samples; ++i) {
        ++report.candidates_examined;
        switch (outcomes[i]) {
          case SampleOutcome::NotLocal: break;
          case SampleOutcome::Degenerate: ++report.degenerate; break;
          case SampleOutcome::Vanishes:
            ++report.valid;
            ++report.vanishing;
            break;
          case SampleOutcome::Half:
            ++report.valid;
            report.witnesses.emplace_back(batch[i].t0, batch[i].x0);
            break;
        }
      }
    }
  }
  return report;
}

std::vector<std::pair<Rational, Rational>> find_global_points(const BrauerClass& c,
                                                              int max_height,
                                                              std::size_t limit) {
  std::vector<std::pair<Rational, Rational>> out;
  const auto excluded = excluded_parameters(c);
  for (int h = 1; h <= max_height && out.size() < limit; ++h) {
    for (const auto& cand : candidates_of_height(h, excluded)) {
      auto fv = fiber_values(c.curve(), cand.t0);
      if (!fv) continue;
      const Rational rhs = cand.x0 * (cand.x0 - fv->p) * (cand.x0 - fv->q);
      if (rhs != 0 && rat_is_square(rhs)) {
        out.emplace_back(cand.t0, cand.x0);
        if (out.size() >= limit) break;
      }
    }
  }
  return out;
}

ReciprocityReport global_reciprocity(const BrauerClass& c, const Rational& t0, const Rational& x0) {
  const FiberValues fv = require_fiber(c.curve(), t0);
  const Rational rhs = x0 * (x0 - fv.p) * (x0 - fv.q);
  if (rhs != 0 && !rat_is_square(rhs)) {
    throw InvalidArgument("(" + bmo::to_string(t0) + ", " + bmo::to_string(x0) +
                          ") is not a rational point");
  }
  const auto args = symbol_arguments(c, t0, x0, fv);
  std::vector<Rational> values;
  for (const auto& [a, b] : args) {
    values.push_back(a);
    values.push_back(b);
  }
  ReciprocityReport report;
  report.t0 = t0;
  report.x0 = x0;
  for (const auto& v : relevant_places(values)) {
    SymbolValue inv = SymbolValue::from_sign(1);
    for (const auto& [a, b] : args) inv = inv * hilbert_symbol(a, b, v);
    report.sum = report.sum * inv;
    report.entries.push_back({v, SurfacePoint::affine(t0, x0, v), inv});
  }
  return report;
}

}  // namespace bmo
