#pragma once

// Polynomial expressions in t, as typed on the command line.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := rational | 't' | '(' expr ')'
//   rational := int ('/' posint)?
//
// Whitespace is ignored. Class literals are "(f, g) + (f, g) + ...".

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmo/exactalg.hpp"

namespace bmo {

class PolyExpr {
 public:
  enum class Kind { Literal, Variable, Negate, Add, Subtract, Multiply, Power };

  /// Throws InvalidArgument on a negative literal (use negate).
  static PolyExpr literal(Rational value);
  static PolyExpr variable();
  static PolyExpr negate(PolyExpr operand);
  static PolyExpr binary(Kind kind, PolyExpr lhs, PolyExpr rhs);
  static PolyExpr power(PolyExpr base, unsigned exponent);

  Kind kind() const { return kind_; }
  const Rational& value() const { return value_; }
  unsigned exponent() const { return exponent_; }
  const std::vector<PolyExpr>& operands() const { return operands_; }

  Polynomial to_polynomial() const;
  RationalFunction to_rational_function() const { return to_polynomial(); }

  /// Minimal parentheses; parse(to_string()) reproduces the tree.
  std::string to_string() const;

  friend bool operator==(const PolyExpr&, const PolyExpr&) = default;

 private:
  PolyExpr() = default;
  Kind kind_ = Kind::Literal;
  Rational value_;
  unsigned exponent_ = 0;
  std::vector<PolyExpr> operands_;
};

/// Largest accepted exponent; anything above is reported as overflow.
inline constexpr unsigned kMaxExponent = 4096;

/// Throws ParseError with the offending position.
PolyExpr parse_poly(std::string_view src);

/// Parses "(f1, g1) + (f2, g2) + ...". Throws ParseError.
std::vector<std::pair<PolyExpr, PolyExpr>> parse_class_literal(std::string_view src);

}  // namespace bmo
