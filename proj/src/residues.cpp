#include "bmo/residues.hpp"

#include <algorithm>

#include "bmo/errors.hpp"

namespace bmo {

QtBrauerClass::QtBrauerClass(std::vector<Symbol> symbols) {
  for (const auto& [f, g] : symbols) {
    if (f.is_zero() || g.is_zero()) throw InvalidArgument("quaternion symbol with a zero entry");
  }
  auto less = [](const Symbol& a, const Symbol& b) {
    auto c = canonical_compare(a.first, b.first);
    if (c != 0) return c < 0;
    return canonical_compare(a.second, b.second) < 0;
  };
  std::sort(symbols.begin(), symbols.end(), less);
  for (auto& s : symbols) {
    if (!symbols_.empty() && symbols_.back() == s) {
      symbols_.pop_back();
    } else {
      symbols_.push_back(std::move(s));
    }
  }
}

std::string QtBrauerClass::to_string() const {
  if (symbols_.empty()) return "0";
  std::string out;
  for (const auto& [f, g] : symbols_) {
    if (!out.empty()) out += " + ";
    out += "(" + f.to_string() + ", " + g.to_string() + ")";
  }
  return out;
}

ResidueVerdict ResidueVerdict::operator*(const ResidueVerdict& other) const {
  if (is_undetermined() || other.is_undetermined()) return undetermined();
  if (kind_ == Kind::TriviallyOne) return other;
  if (other.kind_ == Kind::TriviallyOne) return *this;
  return computed(value_ + other.value_);
}

std::string ResidueVerdict::to_string() const {
  switch (kind_) {
    case Kind::TriviallyOne: return "trivial (parity)";
    case Kind::Undetermined: return "undetermined";
    case Kind::Computed: return value_.is_zero() ? "trivial" : "class " + value_.to_string();
  }
  return "?";
}

ResidueVerdict tame_symbol(const Place& v, const RationalFunction& f, const RationalFunction& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("tame symbol with a zero entry");
  const int vf = valuation(v, f);
  const int vg = valuation(v, g);
  // Every exponent in the formula even: the class is a square.
  if (vf % 2 == 0 && vg % 2 == 0) return ResidueVerdict::trivially_one();
  if (v.degree() != 1) return ResidueVerdict::undetermined();
  const UnitPart uf = unit_part(v, f);
  const UnitPart ug = unit_part(v, g);
  // A "double" (even valuation, square leading residue) kills the symbol.
  if ((vf % 2 == 0 && rat_is_square(uf.residue)) || (vg % 2 == 0 && rat_is_square(ug.residue))) {
    return ResidueVerdict::trivially_one();
  }
  Rational value = ((vf * vg) % 2 != 0) ? Rational(-1) : Rational(1);
  if (vg % 2 != 0) value *= uf.residue;
  if (vf % 2 != 0) value *= ug.residue;
  return ResidueVerdict::computed(class_of(value, FieldMode::RationalsOnly));
}

ClassResidue residue_of_class(const Place& v, const QtBrauerClass& c) {
  ClassResidue out{v, ResidueVerdict::trivially_one(), {}};
  for (const auto& [f, g] : c.symbols()) {
    ResidueVerdict r = tame_symbol(v, f, g);
    out.total = out.total * r;
    out.per_symbol.push_back(std::move(r));
  }
  return out;
}

std::string to_string(Ramification r) {
  switch (r) {
    case Ramification::Unramified: return "unramified";
    case Ramification::Ramified: return "ramified";
    case Ramification::Unknown: return "unknown";
  }
  return "?";
}

UnramifiedReport check_unramified_P1(const QtBrauerClass& c) {
  std::vector<RationalFunction> entries;
  for (const auto& [f, g] : c.symbols()) {
    entries.push_back(f);
    entries.push_back(g);
  }
  UnramifiedReport report;
  bool unknown = false, ramified = false;
  for (const auto& v : places_of_support(entries)) {
    ClassResidue r = residue_of_class(v, c);
    if (r.total.is_undetermined()) {
      unknown = true;
    } else if (!r.total.is_trivial()) {
      ramified = true;
    }
    report.places.push_back(std::move(r));
  }
  if (ramified) {
    report.outcome = Ramification::Ramified;
  } else if (unknown) {
    report.outcome = Ramification::Unknown;
  }
  return report;
}

}  // namespace bmo
