#pragma once

/**
 * @file residues.hpp
 * @brief Tame-symbol residues of quaternion symbols over Q(t) along the
 * closed points of P^1_Q.
 *
 * For f, g in Q(t)* and a place v with residue field k(v), the residue of
 * (f, g) is the tame symbol
 *
 *   d_v(f, g) = (-1)^{v(f) v(g)} [f~]^{v(g)} [g~]^{v(f)}  in k(v)* / k(v)*^2,
 *
 * where z~ = z * pi^{-v(z)}. Parity shortcuts decide triviality at any place;
 * explicit square classes are computed only at rational places. Anything
 * else is reported Undetermined rather than guessed.
 */

#include <string>
#include <utility>
#include <vector>

#include "bmo/exactalg.hpp"
#include "bmo/funcfield.hpp"
#include "bmo/squareclass.hpp"

namespace bmo {

/// Formal F2-sum of quaternion symbols (f, g) over Q(t).
class QtBrauerClass {
 public:
  using Symbol = std::pair<RationalFunction, RationalFunction>;

  QtBrauerClass() = default;
  /// Throws InvalidArgument if any entry is zero. Identical symbols cancel in
  /// pairs; the stored order is canonical.
  explicit QtBrauerClass(std::vector<Symbol> symbols);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  bool empty() const { return symbols_.empty(); }
  std::string to_string() const;

  friend bool operator==(const QtBrauerClass&, const QtBrauerClass&) = default;

 private:
  std::vector<Symbol> symbols_;
};

class ResidueVerdict {
 public:
  enum class Kind { TriviallyOne, Computed, Undetermined };

  static ResidueVerdict trivially_one() { return ResidueVerdict(Kind::TriviallyOne); }
  static ResidueVerdict undetermined() { return ResidueVerdict(Kind::Undetermined); }
  static ResidueVerdict computed(SquareClassVector value) {
    ResidueVerdict r(Kind::Computed);
    r.value_ = std::move(value);
    return r;
  }

  Kind kind() const { return kind_; }
  /// Only for Kind::Computed; a class in mode RationalsOnly.
  const SquareClassVector& value() const { return value_; }
  bool is_trivial() const {
    return kind_ == Kind::TriviallyOne || (kind_ == Kind::Computed && value_.is_zero());
  }
  bool is_undetermined() const { return kind_ == Kind::Undetermined; }

  /// Product in k(v)*/k(v)*^2.
  ResidueVerdict operator*(const ResidueVerdict& other) const;

  /// "trivial", "trivial (parity)", "{3}", "undetermined".
  std::string to_string() const;

 private:
  explicit ResidueVerdict(Kind k) : kind_(k) {}
  Kind kind_;
  SquareClassVector value_{FieldMode::RationalsOnly};
};

/// Throws InvalidArgument on zero inputs.
ResidueVerdict tame_symbol(const Place& v, const RationalFunction& f, const RationalFunction& g);

struct ClassResidue {
  Place place;
  ResidueVerdict total;
  std::vector<ResidueVerdict> per_symbol;
};

ClassResidue residue_of_class(const Place& v, const QtBrauerClass& c);

enum class Ramification { Unramified, Ramified, Unknown };

std::string to_string(Ramification r);

struct UnramifiedReport {
  /// One entry per place in the support of the class's entries; every other
  /// closed point has trivial residue because all entries are units there.
  std::vector<ClassResidue> places;
  Ramification outcome = Ramification::Unramified;
};

/// Residues at every place of P^1_Q where some entry is not a unit. Any
/// Undetermined verdict makes the outcome Unknown.
UnramifiedReport check_unramified_P1(const QtBrauerClass& c);

}  // namespace bmo
