#pragma once

/**
 * @file elliptic.hpp
 * @brief Weierstrass models over Q(t), place-minimal models and Kodaira
 * fiber types, plus the surface-level bookkeeping (Euler number, K3 test,
 * Shioda-Tate rank).
 *
 * Residue characteristic is zero at every place of P^1_Q, so a model is
 * minimal at v exactly when its c4, c6 are integral and not both divisible
 * by pi^4, pi^6; the fiber type is then read off (v(c4), v(c6), v(Delta)).
 */

#include <optional>
#include <string>
#include <vector>

#include "bmo/exactalg.hpp"
#include "bmo/funcfield.hpp"

namespace bmo {

/// y^2 = x(x - p)(x - q) with p != q both nonzero.
struct SplitCurve {
  RationalFunction p;
  RationalFunction q;

  /// Throws InvalidArgument if p == q or either vanishes.
  static SplitCurve make(RationalFunction p, RationalFunction q);
};

/// Long Weierstrass form y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
class WeierstrassCurve {
 public:
  /// Throws SingularCurve when the discriminant vanishes.
  WeierstrassCurve(RationalFunction a1, RationalFunction a2, RationalFunction a3,
                   RationalFunction a4, RationalFunction a6);
  static WeierstrassCurve from_split(const SplitCurve& c);
  /// y^2 = x^3 + a4 x + a6
  static WeierstrassCurve short_form(RationalFunction a4, RationalFunction a6);

  const RationalFunction& a1() const { return a_[0]; }
  const RationalFunction& a2() const { return a_[1]; }
  const RationalFunction& a3() const { return a_[2]; }
  const RationalFunction& a4() const { return a_[3]; }
  const RationalFunction& a6() const { return a_[4]; }

  /// Coordinate change x = u^2 x', y = u^3 y': a_i' = a_i / u^i.
  WeierstrassCurve rescaled(const RationalFunction& u) const;

  /// Reflection t -> -t of every coefficient.
  WeierstrassCurve reflected() const;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

 private:
  RationalFunction a_[5];
};

struct Invariants {
  RationalFunction c4;
  RationalFunction c6;
  RationalFunction discriminant;
};

Invariants invariants(const WeierstrassCurve& c);

/// Rescales by a power of the uniformizer at v so the model is minimal there.
WeierstrassCurve minimalize_at(const Place& v, const WeierstrassCurve& c);

class KodairaType {
 public:
  enum class Family { Good, I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

  static KodairaType good() { return {Family::Good, 0}; }
  static KodairaType multiplicative(int n) { return {Family::I, n}; }
  static KodairaType i_star(int n) { return {Family::IStar, n}; }
  static KodairaType of(Family f) { return {f, 0}; }

  Family family() const { return family_; }
  /// n for I_n and I_n^*.
  int index() const { return n_; }

  int components() const;
  int euler() const;
  /// "I_2", "I0*", "II*", "good".
  std::string to_string() const;

  friend bool operator==(const KodairaType&, const KodairaType&) = default;

 private:
  KodairaType(Family f, int n) : family_(f), n_(n) {}
  Family family_;
  int n_;
};

/// Valuations of the minimal model; nullopt stands for +infinity (a zero
/// invariant).
struct MinimalValuations {
  std::optional<int> c4;
  std::optional<int> c6;
  int discriminant = 0;
};

struct FiberReport {
  Place place;
  KodairaType type;
  int components;
  int euler;
  MinimalValuations valuations;
};

/// Throws ClassificationFailure on a valuation pattern outside the table.
FiberReport kodaira_type_at(const Place& v, const WeierstrassCurve& c);

struct SurfaceReport {
  std::vector<FiberReport> fibers;  // bad fibers only, in place order
  int euler_number = 0;
  Rational chi;
  bool is_k3 = false;
  int rank_trivial_lattice = 0;
  int picard_bound = 0;
  int mw_rank_bound = 0;
  bool semistable = true;

  /// The bound pins the Mordell-Weil rank to zero.
  bool mw_rank_zero_established() const { return mw_rank_bound == 0; }
};

/// Classifies every place where c4, c6 or the discriminant is not a unit,
/// plus infinity. Contributions of a place of degree d are counted d times
/// (one geometric fiber per conjugate point).
SurfaceReport classify_surface(const WeierstrassCurve& c, int picard_bound);

}  // namespace bmo
