#pragma once

// Local Hilbert symbols over Q.

#include <compare>
#include <string>
#include <vector>

#include "bmo/exactalg.hpp"

namespace bmo {

/// A place of Q: the real place or a prime.
class RationalPlace {
 public:
  static RationalPlace real() { return RationalPlace(Integer(0)); }
  /// Throws InvalidArgument unless p is prime.
  static RationalPlace prime(const Integer& p);
  /// "real" / "inf" / "infinity" or a prime. Throws InvalidArgument.
  static RationalPlace parse(const std::string& text);

  bool is_real() const { return p_ == 0; }
  const Integer& prime_value() const { return p_; }

  std::string to_string() const { return is_real() ? std::string("real") : p_.get_str(); }

  friend bool operator==(const RationalPlace& a, const RationalPlace& b) { return a.p_ == b.p_; }
  /// Real first, then primes ascending.
  friend std::strong_ordering operator<=>(const RationalPlace& a, const RationalPlace& b) {
    return cmp(a.p_, b.p_) <=> 0;
  }

 private:
  explicit RationalPlace(Integer p) : p_(std::move(p)) {}
  Integer p_;  // 0 encodes the real place
};

/// A value in {+1, -1} of a quaternion symbol, with its additive invariant
/// in {0, 1/2}.
class SymbolValue {
 public:
  static SymbolValue from_sign(int sign) { return SymbolValue(sign < 0); }
  static SymbolValue from_half(bool half) { return SymbolValue(half); }

  int sign() const { return half_ ? -1 : 1; }
  bool is_half() const { return half_; }
  /// The invariant: 0 or 1/2.
  Rational invariant() const { return half_ ? Rational(1, 2) : Rational(0); }
  std::string invariant_string() const { return half_ ? "1/2" : "0"; }

  SymbolValue operator*(SymbolValue o) const { return SymbolValue(half_ != o.half_); }
  friend bool operator==(SymbolValue, SymbolValue) = default;

 private:
  explicit SymbolValue(bool half) : half_(half) {}
  bool half_;
};

/// Quadratic residue symbol (a | p) for an odd prime p not dividing a.
/// Throws InvalidArgument when p | a or p is not an odd prime.
int legendre(const Integer& a, const Integer& p);

/// (a, b)_v. Throws InvalidArgument on zero arguments.
SymbolValue hilbert_symbol(const Rational& a, const Rational& b, const RationalPlace& v);

/// Whether a is a square in the completion Q_v. Throws InvalidArgument on zero.
bool qp_is_square(const Rational& a, const RationalPlace& v);

/// Real, 2, and every odd prime dividing a numerator or denominator.
std::vector<RationalPlace> relevant_places(const std::vector<Rational>& values);

struct ProductFormulaReport {
  struct Entry {
    RationalPlace place;
    SymbolValue value;
  };
  std::vector<Entry> entries;
  int product = 1;
  bool holds() const { return product == 1; }
};

/// Evaluates (a, b) at every place where it can be nontrivial and multiplies.
ProductFormulaReport product_formula_check(const Rational& a, const Rational& b);

}  // namespace bmo
