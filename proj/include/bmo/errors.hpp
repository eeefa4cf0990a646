#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bmo {

// Precondition violations: zero where a unit is required, mixed modes, points
// off the curve.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A residue value was requested at a place whose residue field is not Q.
class UnsupportedResidueField : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularCurve : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Valuation pattern of a supposedly minimal model that matches no Kodaira type.
class ClassificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Brauer class cannot be evaluated at a point because a symbol argument
// and its curve-relation substitute both degenerate there.
class DegeneratePoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bmo
