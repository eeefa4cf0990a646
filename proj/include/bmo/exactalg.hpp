#pragma once

/**
 * @file exactalg.hpp
 * @brief Exact arithmetic over Q and Q[t]: rationals, univariate polynomials,
 * rational functions and factorization.
 *
 * Integers and rationals are GMP values; mpq_class keeps every value in
 * lowest terms with a positive denominator, which is exactly the canonical
 * form required here. Polynomials store dense coefficient vectors indexed by
 * degree with no trailing zeros, so structural equality is mathematical
 * equality. Rational functions keep a monic denominator coprime to the
 * numerator.
 *
 * All types are immutable values; every free function is pure.
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bmo {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& n);
std::string to_string(const Rational& a);

/// Parses "n" or "n/d" (optional leading sign). Throws InvalidArgument.
Rational parse_rational(const std::string& text);

/// Total order used for canonical listings: by |a| first, then by a.
std::strong_ordering canonical_compare(const Rational& a, const Rational& b);

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);

  /// The indeterminate t.
  static Polynomial t();
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// t - root
  static Polynomial linear(const Rational& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  /// Zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  Polynomial monic() const;
  Polynomial derivative() const;
  /// f(-t)
  Polynomial reflected() const;
  /// t^deg(f) * f(1/t)
  Polynomial reversed() const;
  Polynomial pow(unsigned exponent) const;

  /// Integer content removed and leading coefficient made positive; the
  /// returned factor c satisfies *this == c * primitive.
  std::pair<Rational, std::vector<Integer>> primitive_integer() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Quotient and remainder; throws InvalidArgument on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  /// Compact form accepted back by the expression parser, e.g. "3*t^2-t+1/2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator/(const Polynomial& a, const Polynomial& b);  // exact quotient
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Canonical order: degree, then coefficients from the constant term upward
/// compared with canonical_compare.
std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b);

struct CanonicalLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const {
    return canonical_compare(a, b) < 0;
  }
  bool operator()(const Rational& a, const Rational& b) const {
    return canonical_compare(a, b) < 0;
  }
};

/// Monic gcd. Throws InvalidArgument when both inputs are zero.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

struct Factorization {
  Rational unit;
  /// Monic irreducible factors with positive exponents, canonically sorted.
  std::vector<std::pair<Polynomial, int>> factors;

  Polynomial expand() const;
};

/// Complete factorization over Q. Throws InvalidArgument on zero.
Factorization poly_factor(const Polynomial& f);

struct IntegerFactorization {
  int sign = 1;
  std::vector<std::pair<Integer, int>> primes;  // increasing primes
};

/// Throws InvalidArgument on zero.
IntegerFactorization int_factor(const Integer& n);

/// Throws InvalidArgument on zero.
bool rat_is_square(const Rational& a);

/// Exponent of the prime p in a (a nonzero).
int p_valuation(const Rational& a, const Integer& p);

class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}    // NOLINT
  RationalFunction(int c) : num_(c), den_(1) {}                // NOLINT
  /// Throws InvalidArgument if den is zero.
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction t() { return Polynomial::t(); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Only meaningful when is_constant().
  Rational constant_value() const { return num_.coefficient(0); }

  /// nullopt at a pole.
  std::optional<Rational> operator()(const Rational& x) const;

  RationalFunction reflected() const;
  RationalFunction pow(int exponent) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws InvalidArgument on division by zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  std::string to_string() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

std::strong_ordering canonical_compare(const RationalFunction& a, const RationalFunction& b);

}  // namespace bmo
