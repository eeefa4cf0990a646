#include "bmo/polyexpr.hpp"

#include <cctype>

#include "bmo/errors.hpp"

namespace bmo {

PolyExpr PolyExpr::literal(Rational value) {
  if (value < 0) throw InvalidArgument("negative literal; use negate");
  PolyExpr e;
  e.kind_ = Kind::Literal;
  e.value_ = std::move(value);
  e.value_.canonicalize();
  return e;
}

PolyExpr PolyExpr::variable() {
  PolyExpr e;
  e.kind_ = Kind::Variable;
  return e;
}

PolyExpr PolyExpr::negate(PolyExpr operand) {
  PolyExpr e;
  e.kind_ = Kind::Negate;
  e.operands_.push_back(std::move(operand));
  return e;
}

PolyExpr PolyExpr::binary(Kind kind, PolyExpr lhs, PolyExpr rhs) {
  if (kind != Kind::Add && kind != Kind::Subtract && kind != Kind::Multiply) {
    throw InvalidArgument("not a binary operator");
  }
  PolyExpr e;
  e.kind_ = kind;
  e.operands_.push_back(std::move(lhs));
  e.operands_.push_back(std::move(rhs));
  return e;
}

PolyExpr PolyExpr::power(PolyExpr base, unsigned exponent) {
  PolyExpr e;
  e.kind_ = Kind::Power;
  e.exponent_ = exponent;
  e.operands_.push_back(std::move(base));
  return e;
}

Polynomial PolyExpr::to_polynomial() const {
  switch (kind_) {
    case Kind::Literal: return Polynomial(value_);
    case Kind::Variable: return Polynomial::t();
    case Kind::Negate: return -operands_[0].to_polynomial();
    case Kind::Add: return operands_[0].to_polynomial() + operands_[1].to_polynomial();
    case Kind::Subtract: return operands_[0].to_polynomial() - operands_[1].to_polynomial();
    case Kind::Multiply: return operands_[0].to_polynomial() * operands_[1].to_polynomial();
    case Kind::Power: return operands_[0].to_polynomial().pow(exponent_);
  }
  return Polynomial(0);
}

namespace {

// Binding strength; a child printed below its required level gets parentheses.
int level(const PolyExpr& e) {
  switch (e.kind()) {
    case PolyExpr::Kind::Add:
    case PolyExpr::Kind::Subtract:
    case PolyExpr::Kind::Negate: return 1;
    case PolyExpr::Kind::Multiply: return 2;
    case PolyExpr::Kind::Power: return 3;
    case PolyExpr::Kind::Literal:
    case PolyExpr::Kind::Variable: return 4;
  }
  return 0;
}

// `leading`: e starts an expr, the only spot where a bare unary minus parses.
std::string print(const PolyExpr& e, int required, bool leading) {
  const bool negate_here = e.kind() == PolyExpr::Kind::Negate;
  if (level(e) < required || (negate_here && !leading)) {
    return "(" + print(e, 0, true) + ")";
  }
  const auto& ops = e.operands();
  switch (e.kind()) {
    case PolyExpr::Kind::Literal: return bmo::to_string(e.value());
    case PolyExpr::Kind::Variable: return "t";
    case PolyExpr::Kind::Negate: return "-" + print(ops[0], 2, false);
    case PolyExpr::Kind::Add: return print(ops[0], 1, leading) + "+" + print(ops[1], 2, false);
    case PolyExpr::Kind::Subtract:
      return print(ops[0], 1, leading) + "-" + print(ops[1], 2, false);
    case PolyExpr::Kind::Multiply:
      return print(ops[0], 2, false) + "*" + print(ops[1], 3, false);
    case PolyExpr::Kind::Power:
      return print(ops[0], 4, false) + "^" + std::to_string(e.exponent());
  }
  return "";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  PolyExpr parse_expr() {
    PolyExpr lhs = PolyExpr::literal(0);
    skip();
    if (peek() == '-') {
      ++pos_;
      lhs = PolyExpr::negate(parse_term());
    } else {
      lhs = parse_term();
    }
    for (;;) {
      skip();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      PolyExpr rhs = parse_term();
      lhs = PolyExpr::binary(c == '+' ? PolyExpr::Kind::Add : PolyExpr::Kind::Subtract,
                             std::move(lhs), std::move(rhs));
    }
  }

  void expect(char c, const char* what) {
    skip();
    if (peek() != c) fail(std::string("expected ") + what);
    ++pos_;
  }

  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect_end() {
    skip();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
  }

  bool at_end() {
    skip();
    return pos_ >= src_.size();
  }

 private:
  PolyExpr parse_term() {
    PolyExpr lhs = parse_factor();
    while (accept('*')) {
      lhs = PolyExpr::binary(PolyExpr::Kind::Multiply, std::move(lhs), parse_factor());
    }
    return lhs;
  }

  PolyExpr parse_factor() {
    PolyExpr base = parse_atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected a nonnegative exponent");
    if (digits.size() > 9 || std::stoul(digits) > kMaxExponent) {
      throw ParseError("exponent overflow", start);
    }
    return PolyExpr::power(std::move(base), static_cast<unsigned>(std::stoul(digits)));
  }

  PolyExpr parse_atom() {
    skip();
    const char c = peek();
    if (c == 't') {
      ++pos_;
      return PolyExpr::variable();
    }
    if (c == '(') {
      ++pos_;
      PolyExpr inner = parse_expr();
      expect(')', "')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  PolyExpr parse_rational() {
    const Integer num(read_digits());
    Integer den(1);
    // '/' only continues a literal when digits follow.
    const std::size_t save = pos_;
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      const std::string d = read_digits();
      if (d.empty()) fail("expected a positive denominator");
      den = Integer(d);
      if (den == 0) throw ParseError("zero denominator", at);
    } else {
      pos_ = save;
    }
    return PolyExpr::literal(Rational(num, den));
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string PolyExpr::to_string() const { return print(*this, 0, true); }

PolyExpr parse_poly(std::string_view src) {
  Parser parser(src);
  PolyExpr e = parser.parse_expr();
  parser.expect_end();
  return e;
}

std::vector<std::pair<PolyExpr, PolyExpr>> parse_class_literal(std::string_view src) {
  Parser parser(src);
  std::vector<std::pair<PolyExpr, PolyExpr>> out;
  do {
    parser.expect('(', "'('");
    PolyExpr f = parser.parse_expr();
    parser.expect(',', "','");
    PolyExpr g = parser.parse_expr();
    parser.expect(')', "')'");
    out.emplace_back(std::move(f), std::move(g));
  } while (parser.accept('+'));
  parser.expect_end();
  return out;
}

}  // namespace bmo
