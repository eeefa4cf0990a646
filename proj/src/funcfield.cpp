#include "bmo/funcfield.hpp"

#include <algorithm>

#include "bmo/errors.hpp"

namespace bmo {

Place Place::finite(const Polynomial& pi) {
  if (pi.degree() < 1 || pi.leading() != 1) {
    throw InvalidArgument("place carrier must be monic of positive degree: " + pi.to_string());
  }
  const auto fac = poly_factor(pi);
  if (fac.factors.size() != 1 || fac.factors.front().second != 1) {
    throw InvalidArgument("place carrier is reducible: " + pi.to_string());
  }
  return Place(pi);
}

std::string Place::to_string() const {
  return is_infinity() ? std::string("infinity") : carrier_->to_string();
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.is_infinity() || b.is_infinity()) {
    return static_cast<int>(a.is_infinity()) <=> static_cast<int>(b.is_infinity());
  }
  return canonical_compare(a.carrier(), b.carrier());
}

int multiplicity(const Polynomial& f, const Polynomial& pi) {
  if (f.is_zero()) throw InvalidArgument("multiplicity in the zero polynomial");
  int m = 0;
  Polynomial g = f;
  for (;;) {
    auto [q, r] = Polynomial::divmod(g, pi);
    if (!r.is_zero()) return m;
    g = std::move(q);
    ++m;
  }
}

int valuation(const Place& v, const RationalFunction& f) {
  if (f.is_zero()) throw InvalidArgument("valuation of zero");
  if (v.is_infinity()) return f.denominator().degree() - f.numerator().degree();
  return multiplicity(f.numerator(), v.carrier()) - multiplicity(f.denominator(), v.carrier());
}

RationalFunction uniformizer(const Place& v) {
  if (v.is_infinity()) return RationalFunction(Polynomial(1), Polynomial::t());
  return v.carrier();
}

UnitPart unit_part(const Place& v, const RationalFunction& f) {
  if (f.is_zero()) throw InvalidArgument("unit part of zero");
  if (v.is_infinity()) {
    return {valuation(v, f), f.numerator().leading() / f.denominator().leading()};
  }
  if (v.degree() != 1) {
    throw UnsupportedResidueField("residue field of " + v.to_string() + " is not Q");
  }
  const Polynomial& pi = v.carrier();
  const int vn = multiplicity(f.numerator(), pi);
  const int vd = multiplicity(f.denominator(), pi);
  const Polynomial num = f.numerator() / pi.pow(static_cast<unsigned>(vn));
  const Polynomial den = f.denominator() / pi.pow(static_cast<unsigned>(vd));
  const Rational a = v.root();
  return {vn - vd, num(a) / den(a)};
}

std::vector<Place> places_of_support(const std::vector<RationalFunction>& fs) {
  std::vector<Place> out;
  bool at_infinity = false;
  for (const auto& f : fs) {
    if (f.is_zero()) throw InvalidArgument("support of zero");
    for (const Polynomial* part : {&f.numerator(), &f.denominator()}) {
      if (part->degree() < 1) continue;
      for (const auto& [pi, e] : poly_factor(*part).factors) out.push_back(Place::finite(pi));
    }
    if (valuation(Place::infinity(), f) != 0) at_infinity = true;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (at_infinity) out.push_back(Place::infinity());
  return out;
}

}  // namespace bmo
