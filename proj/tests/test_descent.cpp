#include <doctest.h>

#include "bmo/brauer.hpp"
#include "bmo/errors.hpp"

using namespace bmo;

namespace {

const Polynomial t = Polynomial::t();
constexpr FieldMode Q = FieldMode::RationalConstants;
constexpr FieldMode C = FieldMode::ConstantsAreSquares;

const CurvePoint P{CurvePoint::TwoTorsionP{}};
const CurvePoint Qpt{CurvePoint::TwoTorsionQ{}};
const CurvePoint O{CurvePoint::TwoTorsionOrigin{}};

RationalFunction f6() { return Polynomial(6) * t * (t + 1); }
RationalFunction g6() { return Polynomial(6) * t * (t - 1); }

}  // namespace

TEST_CASE("delta of the 2-torsion over C(t)") {
  const SplitCurve c = example_curve();
  CHECK(delta(P, c, C).to_string() == "({t}, {t, t-1, t+3})");
  CHECK(delta(Qpt, c, C).to_string() == "({t, t+1, t-3}, {t})");
  CHECK(delta(O, c, C) == delta(P, c, C) + delta(Qpt, c, C));
  CHECK(delta(CurvePoint{CurvePoint::Zero{}}, c, C).is_zero());
  CHECK(independent({delta(P, c, C), delta(Qpt, c, C)}));
}

TEST_CASE("delta of the 2-torsion over Q(t)") {
  const SplitCurve c = example_curve();
  // p - q = 48t, p(p - q) = 144t(t - 1)^3(t + 3), q(q - p) = -144t(t + 1)^3(t - 3).
  CHECK(delta(P, c, Q).to_string() == "({3, t}, {t, t-1, t+3})");
  CHECK(delta(Qpt, c, Q).to_string() == "({-1, t, t+1, t-3}, {-1, 3, t})");
  CHECK(independent({delta(P, c, Q), delta(Qpt, c, Q)}));
}

TEST_CASE("delta of affine points") {
  // y^2 = x(x + 1)(x + 4) has the point (-2, 2).
  const SplitCurve c = SplitCurve::make(-1, -4);
  const CurvePoint m{CurvePoint::Affine{-2, 2}};
  CHECK(delta(m, c, Q).to_string() == "({2}, {-1})");
  const auto [f, g] = delta_representative(m, c);
  CHECK(f == RationalFunction(2));
  CHECK(g == RationalFunction(-1));
  CHECK_THROWS_AS(delta(CurvePoint{CurvePoint::Affine{1, 1}}, c, Q), InvalidArgument);
  // An affine point with y = 0 is identified with the matching 2-torsion point.
  const SplitCurve e = example_curve();
  CHECK(delta(CurvePoint{CurvePoint::Affine{e.p, 0}}, e, Q) == delta(P, e, Q));
  CHECK(delta(CurvePoint{CurvePoint::Affine{0, 0}}, e, Q) == delta(O, e, Q));
}

TEST_CASE("gamma builds normalized classes") {
  const SplitCurve c = example_curve();
  const BrauerClass a = gamma(f6(), g6(), c);
  CHECK(a.to_string() == "(x-p, 6*t^2+6*t) + (x-q, 6*t^2-6*t)");
  CHECK(a == build_class_A());
  CHECK(gamma(f6(), RationalFunction(Polynomial(4) * t * t), c).symbols().size() == 1);
  CHECK(gamma(RationalFunction(9), RationalFunction(Rational(1, 4)), c).empty());
  CHECK_THROWS_AS(gamma(0, g6(), c), InvalidArgument);
}

TEST_CASE("A is invariant under t -> -t") {
  const BrauerClass a = build_class_A();
  CHECK(a.reflected() == a);
  const SplitCurve c = example_curve();
  CHECK(gamma(t, t + 1, c).reflected() == gamma(-t + 1, -t, c));
}

TEST_CASE("transcendence test") {
  const SplitCurve c = example_curve();
  const TranscendenceReport r = transcendence_test(f6(), g6(), c, 0);
  CHECK(r.verdict == Transcendence::Transcendental);
  CHECK(r.target.to_string() == "({t, t+1}, {t, t-1})");
  CHECK_FALSE(r.certificate.has_value());

  // delta(P) is in the kernel of gamma.
  const auto [fp, gp] = delta_representative(P, c);
  const TranscendenceReport k = transcendence_test(fp, gp, c, 0);
  CHECK(k.verdict == Transcendence::AlgebraicOverC);
  REQUIRE(k.certificate.has_value());
  CHECK(k.certificate->coefficients == std::vector<bool>{true, false});

  CHECK(transcendence_test(f6(), g6(), c, 1).verdict == Transcendence::Unknown);
  CHECK_THROWS_AS(transcendence_test(f6(), g6(), c, -1), InvalidArgument);
}

TEST_CASE("transcendence ignores rational constants") {
  const SplitCurve c = example_curve();
  const std::vector<Rational> scalars{1, -1, 2, Rational(-3, 7), 5};
  const auto [fp, gp] = delta_representative(Qpt, c);
  for (const auto& a : scalars) {
    for (const auto& b : scalars) {
      CHECK(transcendence_test(RationalFunction(a) * f6(), RationalFunction(b) * g6(), c, 0)
                .verdict == Transcendence::Transcendental);
      CHECK(transcendence_test(RationalFunction(a) * fp, RationalFunction(b) * gp, c, 0)
                .verdict == Transcendence::AlgebraicOverC);
    }
  }
}
