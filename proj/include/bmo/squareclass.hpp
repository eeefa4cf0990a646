#pragma once

/**
 * @file squareclass.hpp
 * @brief Square classes K* modulo squares as F2 vectors over a factor basis.
 *
 * Three ambient fields are supported:
 *  - RationalConstants: K = Q(t), basis -1, rational primes, and monic
 *    irreducible polynomials.
 *  - ConstantsAreSquares: K = C(t) restricted to elements defined over Q.
 *    Constants die. A Q-irreducible factor of degree d splits over C into d
 *    distinct linear factors, and distinct Q-irreducibles share no roots, so
 *    the Q-irreducibles stay F2-independent over C and serve as the basis.
 *  - RationalsOnly: K = Q, basis -1 and primes.
 */

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bmo/exactalg.hpp"

namespace bmo {

enum class FieldMode { RationalConstants, ConstantsAreSquares, RationalsOnly };

std::string to_string(FieldMode mode);

/// One basis element of a square-class group.
class SquareClassBasis {
 public:
  enum class Kind { MinusOne, Prime, Irreducible };

  static SquareClassBasis minus_one() { return SquareClassBasis(Kind::MinusOne, {}, {}); }
  static SquareClassBasis prime(const Integer& p) { return SquareClassBasis(Kind::Prime, p, {}); }
  static SquareClassBasis irreducible(const Polynomial& f) {
    return SquareClassBasis(Kind::Irreducible, {}, f);
  }

  Kind kind() const { return kind_; }
  bool is_constant() const { return kind_ != Kind::Irreducible; }
  const Integer& prime_value() const { return prime_; }
  const Polynomial& polynomial() const { return poly_; }

  std::string to_string() const;

  friend bool operator==(const SquareClassBasis& a, const SquareClassBasis& b) {
    return a.kind_ == b.kind_ && a.prime_ == b.prime_ && a.poly_ == b.poly_;
  }
  /// -1 first, then primes ascending, then polynomials in canonical order.
  friend std::strong_ordering operator<=>(const SquareClassBasis& a, const SquareClassBasis& b);

 private:
  SquareClassBasis(Kind k, Integer p, Polynomial f)
      : kind_(k), prime_(std::move(p)), poly_(std::move(f)) {}
  Kind kind_;
  Integer prime_;
  Polynomial poly_;
};

class SquareClassVector {
 public:
  explicit SquareClassVector(FieldMode mode) : mode_(mode) {}
  SquareClassVector(FieldMode mode, std::set<SquareClassBasis> coordinates);

  FieldMode mode() const { return mode_; }
  const std::set<SquareClassBasis>& coordinates() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  /// Group law (symmetric difference). Throws InvalidArgument on mixed modes.
  SquareClassVector operator+(const SquareClassVector& other) const;

  /// "{t, t-1}"; the zero vector prints as "{}".
  std::string to_string() const;

  friend bool operator==(const SquareClassVector&, const SquareClassVector&) = default;

 private:
  FieldMode mode_;
  std::set<SquareClassBasis> coords_;
};

/// An element of (K*/K*^2)^2.
struct SquareClassPair {
  SquareClassVector first;
  SquareClassVector second;

  FieldMode mode() const { return first.mode(); }
  bool is_zero() const { return first.is_zero() && second.is_zero(); }
  SquareClassPair operator+(const SquareClassPair& other) const {
    return {first + other.first, second + other.second};
  }
  std::string to_string() const { return "(" + first.to_string() + ", " + second.to_string() + ")"; }
  friend bool operator==(const SquareClassPair&, const SquareClassPair&) = default;
};

/// Throws InvalidArgument on zero, and in RationalsOnly mode on a
/// nonconstant f.
SquareClassVector class_of(const RationalFunction& f, FieldMode mode);
SquareClassVector class_of(const Rational& a, FieldMode mode);

/// F2 coefficients of a combination of generators hitting the target.
struct SpanCertificate {
  std::vector<bool> coefficients;
};

/// nullopt when the target is outside the span. Throws InvalidArgument when
/// the modes disagree.
std::optional<SpanCertificate> in_span(const SquareClassPair& target,
                                       const std::vector<SquareClassPair>& generators);

/// True iff no nonempty F2 combination vanishes. Throws InvalidArgument when
/// the modes disagree.
bool independent(const std::vector<SquareClassPair>& vectors);

}  // namespace bmo
