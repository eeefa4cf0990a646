#include "bmo/descent.hpp"

#include <algorithm>

#include "bmo/errors.hpp"

namespace bmo {

std::string to_string(CurveFunction u) {
  switch (u) {
    case CurveFunction::X: return "x";
    case CurveFunction::XMinusP: return "x-p";
    case CurveFunction::XMinusQ: return "x-q";
  }
  return "?";
}

namespace {

bool is_square_in_qt(const RationalFunction& f) {
  return class_of(f, FieldMode::RationalConstants).is_zero();
}

}  // namespace

BrauerClass::BrauerClass(SplitCurve curve, std::vector<CurveSymbol> symbols)
    : curve_(std::move(curve)) {
  std::vector<CurveSymbol> kept;
  for (auto& s : symbols) {
    if (s.f.is_zero()) throw InvalidArgument("quaternion symbol with a zero entry");
    if (!is_square_in_qt(s.f)) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end(), [](const CurveSymbol& a, const CurveSymbol& b) {
    if (a.u != b.u) return a.u < b.u;
    return canonical_compare(a.f, b.f) < 0;
  });
  for (auto& s : kept) {
    if (!symbols_.empty() && symbols_.back() == s) {
      symbols_.pop_back();
    } else {
      symbols_.push_back(std::move(s));
    }
  }
}

BrauerClass BrauerClass::reflected() const {
  std::vector<CurveSymbol> out;
  for (const auto& s : symbols_) {
    CurveFunction u = s.u;
    if (u == CurveFunction::XMinusP) {
      u = CurveFunction::XMinusQ;
    } else if (u == CurveFunction::XMinusQ) {
      u = CurveFunction::XMinusP;
    }
    out.push_back({u, s.f.reflected()});
  }
  return BrauerClass(SplitCurve{curve_.q.reflected(), curve_.p.reflected()}, std::move(out));
}

std::string BrauerClass::to_string() const {
  if (symbols_.empty()) return "0";
  std::string out;
  for (const auto& s : symbols_) {
    if (!out.empty()) out += " + ";
    out += "(" + bmo::to_string(s.u) + ", " + s.f.to_string() + ")";
  }
  return out;
}

std::pair<RationalFunction, RationalFunction> delta_representative(const CurvePoint& m,
                                                                   const SplitCurve& c) {
  const auto& p = c.p;
  const auto& q = c.q;
  const std::pair<RationalFunction, RationalFunction> at_p{p - q, p * (p - q)};
  const std::pair<RationalFunction, RationalFunction> at_q{q * (q - p), q - p};
  // (0,0) = P + Q and delta is a homomorphism.
  const std::pair<RationalFunction, RationalFunction> at_origin{at_p.first * at_q.first,
                                                                at_p.second * at_q.second};

  if (std::holds_alternative<CurvePoint::Zero>(m.value)) return {1, 1};
  if (std::holds_alternative<CurvePoint::TwoTorsionP>(m.value)) return at_p;
  if (std::holds_alternative<CurvePoint::TwoTorsionQ>(m.value)) return at_q;
  if (std::holds_alternative<CurvePoint::TwoTorsionOrigin>(m.value)) return at_origin;

  const auto& a = std::get<CurvePoint::Affine>(m.value);
  if (a.y * a.y != a.x * (a.x - p) * (a.x - q)) {
    throw InvalidArgument("point (" + a.x.to_string() + ", " + a.y.to_string() +
                          ") is not on the curve");
  }
  if (a.y.is_zero()) {
    if (a.x.is_zero()) return at_origin;
    return a.x == p ? at_p : at_q;
  }
  return {a.x - q, a.x - p};
}

DescentPair delta(const CurvePoint& m, const SplitCurve& curve, FieldMode mode) {
  auto [f, g] = delta_representative(m, curve);
  return {class_of(f, mode), class_of(g, mode)};
}

BrauerClass gamma(const RationalFunction& f, const RationalFunction& g, const SplitCurve& curve) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("gamma of zero");
  return BrauerClass(curve, {{CurveFunction::XMinusP, f}, {CurveFunction::XMinusQ, g}});
}

std::string to_string(Transcendence t) {
  switch (t) {
    case Transcendence::Transcendental: return "transcendental";
    case Transcendence::AlgebraicOverC: return "algebraic";
    case Transcendence::Unknown: return "unknown";
  }
  return "?";
}

TranscendenceReport transcendence_test(const RationalFunction& f, const RationalFunction& g,
                                       const SplitCurve& curve, int mw_rank_bound) {
  if (mw_rank_bound < 0) throw InvalidArgument("negative Mordell-Weil rank bound");
  constexpr FieldMode mode = FieldMode::ConstantsAreSquares;
  TranscendenceReport report;
  report.target = {class_of(f, mode), class_of(g, mode)};
  report.kernel_basis = {delta(CurvePoint{CurvePoint::TwoTorsionP{}}, curve, mode),
                         delta(CurvePoint{CurvePoint::TwoTorsionQ{}}, curve, mode)};
  if (mw_rank_bound > 0) return report;
  report.certificate = in_span(report.target, report.kernel_basis);
  report.verdict =
      report.certificate ? Transcendence::AlgebraicOverC : Transcendence::Transcendental;
  return report;
}

}  // namespace bmo
