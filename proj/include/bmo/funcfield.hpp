#pragma once

// Closed points of the projective line over Q and the discrete valuations
// they define on Q(t).

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bmo/exactalg.hpp"

namespace bmo {

/// A closed point of P^1_Q: a monic irreducible polynomial, or infinity.
class Place {
 public:
  static Place infinity() { return Place(); }
  /// Throws InvalidArgument unless pi is monic and irreducible over Q.
  static Place finite(const Polynomial& pi);
  /// The rational point t = a.
  static Place at(const Rational& a) { return Place(Polynomial::linear(a)); }

  bool is_infinity() const { return !carrier_.has_value(); }
  /// The monic irreducible carrier; only for finite places.
  const Polynomial& carrier() const { return *carrier_; }
  int degree() const { return carrier_ ? carrier_->degree() : 1; }
  /// The rational point of a degree-one finite place.
  Rational root() const { return -carrier_->coefficient(0); }

  /// "t-1", "t^2+1", "infinity".
  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) = default;
  /// Finite places in canonical polynomial order, infinity last.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);

 private:
  Place() = default;
  explicit Place(Polynomial pi) : carrier_(std::move(pi)) {}
  std::optional<Polynomial> carrier_;
};

/// Valuation and leading residue z -> (v(z), [z * pi^-v(z)]).
struct UnitPart {
  int valuation = 0;
  Rational residue;
};

/// Exponent of pi in f (f nonzero polynomial, pi nonconstant).
int multiplicity(const Polynomial& f, const Polynomial& pi);

/// Order of f at v. Throws InvalidArgument on zero.
int valuation(const Place& v, const RationalFunction& f);

/// Uniformizer: the carrier at finite places, 1/t at infinity.
RationalFunction uniformizer(const Place& v);

/// Throws InvalidArgument on zero and UnsupportedResidueField at places of
/// degree two or more.
UnitPart unit_part(const Place& v, const RationalFunction& f);

/// Every place where some f has a zero or a pole, sorted, infinity last.
std::vector<Place> places_of_support(const std::vector<RationalFunction>& fs);

}  // namespace bmo
