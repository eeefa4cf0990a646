#include "bmo/squareclass.hpp"

#include <map>

#include "bmo/errors.hpp"

namespace bmo {

std::string to_string(FieldMode mode) {
  switch (mode) {
    case FieldMode::RationalConstants: return "Q(t)";
    case FieldMode::ConstantsAreSquares: return "C(t)";
    case FieldMode::RationalsOnly: return "Q";
  }
  return "?";
}

std::string SquareClassBasis::to_string() const {
  switch (kind_) {
    case Kind::MinusOne: return "-1";
    case Kind::Prime: return prime_.get_str();
    case Kind::Irreducible: return poly_.to_string();
  }
  return "?";
}

std::strong_ordering operator<=>(const SquareClassBasis& a, const SquareClassBasis& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  switch (a.kind_) {
    case SquareClassBasis::Kind::MinusOne: return std::strong_ordering::equal;
    case SquareClassBasis::Kind::Prime: {
      int c = cmp(a.prime_, b.prime_);
      return c <=> 0;
    }
    case SquareClassBasis::Kind::Irreducible: return canonical_compare(a.poly_, b.poly_);
  }
  return std::strong_ordering::equal;
}

SquareClassVector::SquareClassVector(FieldMode mode, std::set<SquareClassBasis> coordinates)
    : mode_(mode), coords_(std::move(coordinates)) {
  for (const auto& b : coords_) {
    bool allowed = mode_ == FieldMode::RationalConstants ||
                   (mode_ == FieldMode::ConstantsAreSquares && !b.is_constant()) ||
                   (mode_ == FieldMode::RationalsOnly && b.is_constant());
    if (!allowed) {
      throw InvalidArgument("basis element " + b.to_string() + " not allowed in mode " +
                            bmo::to_string(mode_));
    }
  }
}

SquareClassVector SquareClassVector::operator+(const SquareClassVector& other) const {
  if (mode_ != other.mode_) throw InvalidArgument("square classes of different fields");
  SquareClassVector r(*this);
  for (const auto& b : other.coords_) {
    if (!r.coords_.erase(b)) r.coords_.insert(b);
  }
  return r;
}

std::string SquareClassVector::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& b : coords_) {
    if (!first) out += ", ";
    out += b.to_string();
    first = false;
  }
  return out + "}";
}

namespace {

void toggle(std::set<SquareClassBasis>& s, const SquareClassBasis& b) {
  if (!s.erase(b)) s.insert(b);
}

void add_constant(std::set<SquareClassBasis>& s, const Rational& c) {
  if (c < 0) toggle(s, SquareClassBasis::minus_one());
  for (const Integer* part : {&c.get_num(), &c.get_den()}) {
    for (const auto& [p, e] : int_factor(*part).primes) {
      if (e % 2 != 0) toggle(s, SquareClassBasis::prime(p));
    }
  }
}

}  // namespace

SquareClassVector class_of(const Rational& a, FieldMode mode) {
  if (a == 0) throw InvalidArgument("square class of zero");
  std::set<SquareClassBasis> s;
  if (mode != FieldMode::ConstantsAreSquares) add_constant(s, a);
  return SquareClassVector(mode, std::move(s));
}

SquareClassVector class_of(const RationalFunction& f, FieldMode mode) {
  if (f.is_zero()) throw InvalidArgument("square class of zero");
  if (mode == FieldMode::RationalsOnly && !f.is_constant()) {
    throw InvalidArgument("nonconstant function " + f.to_string() + " in mode Q");
  }
  std::set<SquareClassBasis> s;
  Rational unit = 1;
  for (const Polynomial* part : {&f.numerator(), &f.denominator()}) {
    if (part->degree() < 1) {
      unit *= part->leading();
      continue;
    }
    auto fac = poly_factor(*part);
    unit *= fac.unit;
    for (const auto& [pi, e] : fac.factors) {
      if (e % 2 != 0) toggle(s, SquareClassBasis::irreducible(pi));
    }
  }
  if (mode != FieldMode::ConstantsAreSquares) add_constant(s, unit);
  return SquareClassVector(mode, std::move(s));
}

namespace {

using Bits = std::vector<bool>;

void xor_into(Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] != b[i];
}

bool any(const Bits& a) {
  for (bool x : a) {
    if (x) return true;
  }
  return false;
}

// Coordinates of every pair laid out in one shared index.
struct Layout {
  std::map<std::pair<int, SquareClassBasis>, std::size_t> index;

  void add(const SquareClassPair& v) {
    for (const auto& b : v.first.coordinates()) index.try_emplace({0, b}, index.size());
    for (const auto& b : v.second.coordinates()) index.try_emplace({1, b}, index.size());
  }
  Bits bits(const SquareClassPair& v) const {
    Bits out(index.size(), false);
    for (const auto& b : v.first.coordinates()) out[index.at({0, b})] = true;
    for (const auto& b : v.second.coordinates()) out[index.at({1, b})] = true;
    return out;
  }
};

struct Row {
  Bits vec;
  Bits combo;
  std::size_t pivot;
};

void check_modes(const std::vector<SquareClassPair>& vs, FieldMode mode) {
  for (const auto& v : vs) {
    if (v.first.mode() != mode || v.second.mode() != mode) {
      throw InvalidArgument("square classes of different fields");
    }
  }
}

// Reduces vec (with its combination tag) against the echelon rows.
void reduce(const std::vector<Row>& rows, Bits& vec, Bits& combo) {
  for (const auto& r : rows) {
    if (vec[r.pivot]) {
      xor_into(vec, r.vec);
      xor_into(combo, r.combo);
    }
  }
}

}  // namespace

std::optional<SpanCertificate> in_span(const SquareClassPair& target,
                                       const std::vector<SquareClassPair>& generators) {
  check_modes({target}, target.mode());
  check_modes(generators, target.mode());
  Layout layout;
  layout.add(target);
  for (const auto& g : generators) layout.add(g);

  const std::size_t k = generators.size();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < k; ++i) {
    Bits vec = layout.bits(generators[i]);
    Bits combo(k, false);
    combo[i] = true;
    reduce(rows, vec, combo);
    if (!any(vec)) continue;
    std::size_t pivot = 0;
    while (!vec[pivot]) ++pivot;
    // Keep the echelon form fully reduced so one pass suffices.
    for (auto& r : rows) {
      if (r.vec[pivot]) {
        xor_into(r.vec, vec);
        xor_into(r.combo, combo);
      }
    }
    rows.push_back({std::move(vec), std::move(combo), pivot});
  }
  Bits vec = layout.bits(target);
  Bits combo(k, false);
  reduce(rows, vec, combo);
  if (any(vec)) return std::nullopt;
  return SpanCertificate{std::move(combo)};
}

bool independent(const std::vector<SquareClassPair>& vectors) {
  if (vectors.empty()) return true;
  check_modes(vectors, vectors.front().mode());
  Layout layout;
  for (const auto& v : vectors) layout.add(v);
  std::vector<Row> rows;
  for (const auto& v : vectors) {
    Bits vec = layout.bits(v);
    Bits combo;
    for (const auto& r : rows) {
      if (vec[r.pivot]) xor_into(vec, r.vec);
    }
    if (!any(vec)) return false;
    std::size_t pivot = 0;
    while (!vec[pivot]) ++pivot;
    for (auto& r : rows) {
      if (r.vec[pivot]) xor_into(r.vec, vec);
    }
    rows.push_back({std::move(vec), {}, pivot});
  }
  return true;
}

}  // namespace bmo
