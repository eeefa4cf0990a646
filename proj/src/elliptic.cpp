#include "bmo/elliptic.hpp"

#include <algorithm>
#include <limits>

#include "bmo/errors.hpp"

namespace bmo {

SplitCurve SplitCurve::make(RationalFunction p, RationalFunction q) {
  if (p.is_zero() || q.is_zero()) throw InvalidArgument("split curve needs p, q nonzero");
  if (p == q) throw InvalidArgument("split curve needs p != q");
  return SplitCurve{std::move(p), std::move(q)};
}

WeierstrassCurve::WeierstrassCurve(RationalFunction a1, RationalFunction a2, RationalFunction a3,
                                   RationalFunction a4, RationalFunction a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
  if (invariants(*this).discriminant.is_zero()) throw SingularCurve("discriminant vanishes");
}

WeierstrassCurve WeierstrassCurve::from_split(const SplitCurve& c) {
  return WeierstrassCurve(0, -(c.p + c.q), 0, c.p * c.q, 0);
}

WeierstrassCurve WeierstrassCurve::short_form(RationalFunction a4, RationalFunction a6) {
  return WeierstrassCurve(0, 0, 0, std::move(a4), std::move(a6));
}

WeierstrassCurve WeierstrassCurve::rescaled(const RationalFunction& u) const {
  return WeierstrassCurve(a_[0] / u, a_[1] / u.pow(2), a_[2] / u.pow(3), a_[3] / u.pow(4),
                          a_[4] / u.pow(6));
}

WeierstrassCurve WeierstrassCurve::reflected() const {
  return WeierstrassCurve(a_[0].reflected(), a_[1].reflected(), a_[2].reflected(),
                          a_[3].reflected(), a_[4].reflected());
}

Invariants invariants(const WeierstrassCurve& c) {
  const auto &a1 = c.a1(), &a2 = c.a2(), &a3 = c.a3(), &a4 = c.a4(), &a6 = c.a6();
  const RationalFunction b2 = a1 * a1 + 4 * a2;
  const RationalFunction b4 = 2 * a4 + a1 * a3;
  const RationalFunction b6 = a3 * a3 + 4 * a6;
  const RationalFunction b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  Invariants out;
  out.c4 = b2 * b2 - 24 * b4;
  out.c6 = -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6;
  out.discriminant = -(b2 * b2 * b8) - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  return out;
}

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::optional<int> valuation_or_infinity(const Place& v, const RationalFunction& f) {
  if (f.is_zero()) return std::nullopt;
  return valuation(v, f);
}

}  // namespace

WeierstrassCurve minimalize_at(const Place& v, const WeierstrassCurve& c) {
  const Invariants inv = invariants(c);
  int s = std::numeric_limits<int>::max();
  if (!inv.c4.is_zero()) s = std::min(s, floor_div(valuation(v, inv.c4), 4));
  if (!inv.c6.is_zero()) s = std::min(s, floor_div(valuation(v, inv.c6), 6));
  if (s == 0) return c;
  return c.rescaled(uniformizer(v).pow(s));
}

int KodairaType::components() const {
  switch (family_) {
    case Family::Good: return 1;
    case Family::I: return n_;
    case Family::II: return 1;
    case Family::III: return 2;
    case Family::IV: return 3;
    case Family::IStar: return 5 + n_;
    case Family::IVStar: return 7;
    case Family::IIIStar: return 8;
    case Family::IIStar: return 9;
  }
  return 0;
}

int KodairaType::euler() const {
  switch (family_) {
    case Family::Good: return 0;
    case Family::I: return n_;
    case Family::II: return 2;
    case Family::III: return 3;
    case Family::IV: return 4;
    case Family::IStar: return 6 + n_;
    case Family::IVStar: return 8;
    case Family::IIIStar: return 9;
    case Family::IIStar: return 10;
  }
  return 0;
}

std::string KodairaType::to_string() const {
  switch (family_) {
    case Family::Good: return "good";
    case Family::I: return "I_" + std::to_string(n_);
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::IStar: return "I_" + std::to_string(n_) + "*";
    case Family::IVStar: return "IV*";
    case Family::IIIStar: return "III*";
    case Family::IIStar: return "II*";
  }
  return "?";
}

FiberReport kodaira_type_at(const Place& v, const WeierstrassCurve& c) {
  const Invariants inv = invariants(minimalize_at(v, c));
  MinimalValuations vals{valuation_or_infinity(v, inv.c4), valuation_or_infinity(v, inv.c6),
                         valuation(v, inv.discriminant)};
  const int vd = vals.discriminant;
  const int vc4 = vals.c4.value_or(std::numeric_limits<int>::max());

  using F = KodairaType::Family;
  std::optional<KodairaType> type;
  if (vd == 0) {
    type = KodairaType::good();
  } else if (vc4 == 0) {
    type = KodairaType::multiplicative(vd);
  } else if (vd == 2) {
    type = KodairaType::of(F::II);
  } else if (vd == 3 && vc4 == 1) {
    type = KodairaType::of(F::III);
  } else if (vd == 4 && vc4 >= 2) {
    type = KodairaType::of(F::IV);
  } else if (vd == 6 && vc4 >= 2) {
    type = KodairaType::i_star(0);
  } else if (vd > 6 && vc4 == 2) {
    type = KodairaType::i_star(vd - 6);
  } else if (vd == 8 && vc4 >= 3) {
    type = KodairaType::of(F::IVStar);
  } else if (vd == 9 && vc4 == 3) {
    type = KodairaType::of(F::IIIStar);
  } else if (vd == 10 && vc4 >= 4) {
    type = KodairaType::of(F::IIStar);
  }
  if (!type) {
    throw ClassificationFailure("no Kodaira type for v(c4)=" +
                                (vals.c4 ? std::to_string(*vals.c4) : std::string("inf")) +
                                ", v(disc)=" + std::to_string(vd) + " at " + v.to_string());
  }
  return FiberReport{v, *type, type->components(), type->euler(), vals};
}

SurfaceReport classify_surface(const WeierstrassCurve& c, int picard_bound) {
  const Invariants inv = invariants(c);
  std::vector<RationalFunction> support{inv.discriminant};
  if (!inv.c4.is_zero()) support.push_back(inv.c4);
  if (!inv.c6.is_zero()) support.push_back(inv.c6);
  std::vector<Place> places = places_of_support(support);
  if (places.empty() || !places.back().is_infinity()) places.push_back(Place::infinity());

  SurfaceReport report;
  report.rank_trivial_lattice = 2;
  for (const auto& v : places) {
    FiberReport f = kodaira_type_at(v, c);
    if (f.type == KodairaType::good()) continue;
    report.euler_number += v.degree() * f.euler;
    report.rank_trivial_lattice += v.degree() * (f.components - 1);
    if (f.type.family() != KodairaType::Family::I) report.semistable = false;
    report.fibers.push_back(std::move(f));
  }
  report.chi = Rational(report.euler_number, 12);
  report.chi.canonicalize();
  report.is_k3 = report.euler_number == 24 && report.chi == 2;
  report.picard_bound = picard_bound;
  report.mw_rank_bound = picard_bound - report.rank_trivial_lattice;
  return report;
}

}  // namespace bmo
