#pragma once

/**
 * @file brauer.hpp
 * @brief Evaluation of Brauer classes at local points of the elliptic
 * surface y^2 = x(x - p(t))(x - q(t)), the adelic pairing, and sampled
 * local vanishing checks.
 *
 * A class sum_i (u_i, f_i) is evaluated at a Q_v-point with coordinates
 * (t0, x0) as sum_i inv_v (u_i(x0, t0), f_i(t0)). When u_i vanishes at the
 * point it is replaced by a function differing from it by a square on the
 * curve: x - p by x(x - q), x - q by x(x - p), x by (x - p)(x - q).
 */

#include <map>
#include <string>
#include <vector>

#include "bmo/descent.hpp"
#include "bmo/hilbert.hpp"

namespace bmo {

/// p(t) = 3(t - 1)^3 (t + 3).
Polynomial example_p();
/// q(t) = p(-t).
Polynomial example_q();
SplitCurve example_curve();

/// gamma(6t(t + 1), 6t(t - 1)) on the example curve.
BrauerClass build_class_A();

/// A Q_v-point of the surface: the zero section, or an affine point (t0, x0)
/// with x0(x0 - p(t0))(x0 - q(t0)) a square in Q_v (or zero).
class SurfacePoint {
 public:
  static SurfacePoint zero_section(RationalPlace place) { return SurfacePoint(std::move(place)); }
  static SurfacePoint affine(Rational t0, Rational x0, RationalPlace place) {
    return SurfacePoint(std::move(t0), std::move(x0), std::move(place));
  }

  bool is_zero_section() const { return zero_section_; }
  const Rational& t0() const { return t0_; }
  const Rational& x0() const { return x0_; }
  const RationalPlace& place() const { return place_; }

  std::string to_string() const;

 private:
  explicit SurfacePoint(RationalPlace place) : zero_section_(true), place_(std::move(place)) {}
  SurfacePoint(Rational t0, Rational x0, RationalPlace place)
      : zero_section_(false), t0_(std::move(t0)), x0_(std::move(x0)), place_(std::move(place)) {}

  bool zero_section_;
  Rational t0_, x0_;
  RationalPlace place_;
};

/// Whether (t0, x0) lies on the curve over Q_v (nonsingular fiber not
/// required). False when p or q has a pole at t0.
bool on_curve_locally(const SplitCurve& curve, const Rational& t0, const Rational& x0,
                      const RationalPlace& v);

/// inv_v of c at m, as a SymbolValue (0 or 1/2). Throws InvalidArgument for
/// a point off the curve and DegeneratePoint when no substitute helps.
SymbolValue evaluate_local(const BrauerClass& c, const SurfacePoint& m);

/// Overrides at finitely many places; the zero section everywhere else.
struct AdelicPointSpec {
  std::map<RationalPlace, SurfacePoint> overrides;
};

struct ObstructionReport {
  struct Entry {
    RationalPlace place;
    SurfacePoint point;
    SymbolValue inv;
  };
  std::vector<Entry> entries;  // overridden places, ascending
  SymbolValue sum = SymbolValue::from_sign(1);
  bool obstructed() const { return sum.is_half(); }
};

ObstructionReport adelic_pairing(const BrauerClass& c, const AdelicPointSpec& spec);

/// The adelic point: M2 = (t, x) = (2, 1) at the prime 2, zero section elsewhere.
AdelicPointSpec example_adelic_point();

struct SamplingReport {
  RationalPlace place = RationalPlace::real();
  int height = 0;
  int requested = 0;
  long candidates_examined = 0;
  int valid = 0;
  int vanishing = 0;
  long degenerate = 0;
  std::vector<std::pair<Rational, Rational>> witnesses;  // (t0, x0) with inv 1/2
  std::vector<Rational> excluded_t;

  bool sufficient() const { return valid >= requested; }
  bool all_vanish() const { return witnesses.empty(); }
};

/// Walks (t0, x0) by increasing height up to `height`, keeps those that are
/// Q_v-points of the surface, evaluates c there, and stops after `samples`
/// valid points. Parameters t0 over singular fibers or where an f_i
/// degenerates are skipped and listed in the report.
SamplingReport sample_vanishing(const BrauerClass& c, const RationalPlace& place, int samples,
                                int height = 20);

struct ReciprocityReport {
  Rational t0, x0;
  std::vector<ObstructionReport::Entry> entries;
  SymbolValue sum = SymbolValue::from_sign(1);
};

/// Global points (t0, x0) of height <= height with x0(x0-p)(x0-q) a nonzero
/// rational square, skipping singular fibers.
std::vector<std::pair<Rational, Rational>> find_global_points(const BrauerClass& c, int height,
                                                              std::size_t limit);

/// Sum over every place of Q of inv_v c(M) at a global point M.
ReciprocityReport global_reciprocity(const BrauerClass& c, const Rational& t0, const Rational& x0);

}  // namespace bmo
