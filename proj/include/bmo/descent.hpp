#pragma once

/**
 * @file descent.hpp
 * @brief The 2-descent maps for y^2 = x(x - p)(x - q) over K = Q(t) or C(t).
 *
 *   0 -> E(K)/2E(K) --delta--> (K* mod squares)^2 --gamma--> 2Br0(E) -> 0
 *
 * with P = (p, 0), Q = (q, 0) and
 *
 *   delta(M) = (x(M) - q, x(M) - p)        M not 2-torsion
 *   delta(P) = (p - q, p(p - q))
 *   delta(Q) = (q(q - p), q - p)
 *   gamma(f, g) = (x - p, f) + (x - q, g)
 *
 * The coordinate order is deliberate (first slot x - q, second x - p), and
 * the evaluation-level exactness tests fail if it is transposed.
 */

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bmo/elliptic.hpp"
#include "bmo/squareclass.hpp"

namespace bmo {

using DescentPair = SquareClassPair;

/// A coordinate function on the curve used as the first slot of a symbol.
enum class CurveFunction { X, XMinusP, XMinusQ };

std::string to_string(CurveFunction u);

/// The quaternion symbol (u, f) with u a curve function and f in Q(t)*.
struct CurveSymbol {
  CurveFunction u;
  RationalFunction f;

  friend bool operator==(const CurveSymbol&, const CurveSymbol&) = default;
};

/// Formal F2-sum of symbols (u_i, f_i) on a split curve.
class BrauerClass {
 public:
  /// Drops symbols whose second entry is a square in Q(t) and cancels equal
  /// symbols in pairs; stores them in canonical order. Throws InvalidArgument
  /// on a zero entry.
  BrauerClass(SplitCurve curve, std::vector<CurveSymbol> symbols);

  const SplitCurve& curve() const { return curve_; }
  const std::vector<CurveSymbol>& symbols() const { return symbols_; }
  bool empty() const { return symbols_.empty(); }

  /// Image under t -> -t, for a curve with q(t) = p(-t): x - p and x - q
  /// trade places and every f is reflected.
  BrauerClass reflected() const;

  std::string to_string() const;

  friend bool operator==(const BrauerClass& a, const BrauerClass& b) {
    return a.curve_.p == b.curve_.p && a.curve_.q == b.curve_.q && a.symbols_ == b.symbols_;
  }

 private:
  SplitCurve curve_;
  std::vector<CurveSymbol> symbols_;
};

/// A point of the generic fiber.
struct CurvePoint {
  struct Zero {};
  struct TwoTorsionP {};
  struct TwoTorsionQ {};
  struct TwoTorsionOrigin {};  // (0, 0)
  struct Affine {
    RationalFunction x;
    RationalFunction y;
  };
  std::variant<Zero, TwoTorsionP, TwoTorsionQ, TwoTorsionOrigin, Affine> value;
};

/// Rational-function representatives of delta(M), before reduction mod
/// squares. Throws InvalidArgument for an affine point off the curve.
std::pair<RationalFunction, RationalFunction> delta_representative(const CurvePoint& m,
                                                                   const SplitCurve& curve);

DescentPair delta(const CurvePoint& m, const SplitCurve& curve, FieldMode mode);

/// (x - p, f) + (x - q, g). Throws InvalidArgument on zero inputs.
BrauerClass gamma(const RationalFunction& f, const RationalFunction& g, const SplitCurve& curve);

enum class Transcendence { Transcendental, AlgebraicOverC, Unknown };

std::string to_string(Transcendence t);

struct TranscendenceReport {
  Transcendence verdict = Transcendence::Unknown;
  DescentPair target{SquareClassVector(FieldMode::ConstantsAreSquares),
                     SquareClassVector(FieldMode::ConstantsAreSquares)};
  std::vector<DescentPair> kernel_basis;  // delta(P), delta(Q) over C(t)
  /// Combination of the kernel basis hitting the target, when algebraic.
  std::optional<SpanCertificate> certificate;
};

/// With Mordell-Weil rank zero over C(t), ker(gamma) is spanned by delta(P)
/// and delta(Q); gamma(f, g) is transcendental iff (f, g) leaves that span.
/// A positive rank bound yields Unknown. Throws InvalidArgument for a
/// negative bound.
TranscendenceReport transcendence_test(const RationalFunction& f, const RationalFunction& g,
                                       const SplitCurve& curve, int mw_rank_bound);

}  // namespace bmo
