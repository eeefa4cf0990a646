#include "bmo/hilbert.hpp"

#include <algorithm>

#include "bmo/errors.hpp"

namespace bmo {

namespace {

bool is_prime(const Integer& p) { return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) != 0; }

// a = p^alpha * u with u a p-adic unit; u returned as n/d with p dividing
// neither.
struct Split {
  int alpha;
  Integer num;
  Integer den;
};

Split split_at(const Rational& a, const Integer& p) {
  Split s{0, a.get_num(), a.get_den()};
  while (mpz_divisible_p(s.num.get_mpz_t(), p.get_mpz_t()) != 0) {
    s.num /= p;
    ++s.alpha;
  }
  while (mpz_divisible_p(s.den.get_mpz_t(), p.get_mpz_t()) != 0) {
    s.den /= p;
    --s.alpha;
  }
  return s;
}

// Residue mod 8 of an odd 2-adic unit n/d (d^-1 == d mod 8).
unsigned long unit_mod8(const Split& s) {
  Integer r = s.num * s.den;
  return mpz_fdiv_ui(r.get_mpz_t(), 8);
}

int epsilon(unsigned long u) { return static_cast<int>(((u - 1) / 2) % 2); }
int omega(unsigned long u) { return static_cast<int>(((u * u - 1) / 8) % 2); }

int unit_legendre(const Split& s, const Integer& p) {
  return legendre(s.num, p) * legendre(s.den, p);
}

}  // namespace

RationalPlace RationalPlace::prime(const Integer& p) {
  if (!is_prime(p)) throw InvalidArgument(p.get_str() + " is not a prime");
  return RationalPlace(p);
}

RationalPlace RationalPlace::parse(const std::string& text) {
  if (text == "real" || text == "inf" || text == "infinity" || text == "R") return real();
  Integer p;
  if (text.empty() || p.set_str(text, 10) != 0) {
    throw InvalidArgument("not a place of Q: '" + text + "'");
  }
  return prime(p);
}

int legendre(const Integer& a, const Integer& p) {
  if (p == 2 || !is_prime(p)) throw InvalidArgument("legendre symbol needs an odd prime");
  if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) != 0) {
    throw InvalidArgument("legendre symbol: " + p.get_str() + " divides " + a.get_str());
  }
  // Euler's criterion.
  Integer r;
  Integer e = (p - 1) / 2;
  Integer base;
  mpz_mod(base.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return r == 1 ? 1 : -1;
}

SymbolValue hilbert_symbol(const Rational& a, const Rational& b, const RationalPlace& v) {
  if (a == 0 || b == 0) throw InvalidArgument("hilbert symbol of zero");
  if (v.is_real()) return SymbolValue::from_sign(a < 0 && b < 0 ? -1 : 1);
  const Integer& p = v.prime_value();
  const Split sa = split_at(a, p);
  const Split sb = split_at(b, p);
  if (p == 2) {
    const unsigned long u = unit_mod8(sa), w = unit_mod8(sb);
    const int e = epsilon(u) * epsilon(w) + sa.alpha * omega(w) + sb.alpha * omega(u);
    return SymbolValue::from_half(e % 2 != 0);
  }
  int sign = 1;
  // (p-1)/2 odd  <=>  p == 3 mod 4
  if ((sa.alpha * sb.alpha) % 2 != 0 && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) sign = -sign;
  if (sb.alpha % 2 != 0) sign *= unit_legendre(sa, p);
  if (sa.alpha % 2 != 0) sign *= unit_legendre(sb, p);
  return SymbolValue::from_sign(sign);
}

bool qp_is_square(const Rational& a, const RationalPlace& v) {
  if (a == 0) throw InvalidArgument("square test of zero");
  if (v.is_real()) return a > 0;
  const Integer& p = v.prime_value();
  const Split s = split_at(a, p);
  if (s.alpha % 2 != 0) return false;
  if (p == 2) return unit_mod8(s) == 1;
  return unit_legendre(s, p) == 1;
}

std::vector<RationalPlace> relevant_places(const std::vector<Rational>& values) {
  std::vector<RationalPlace> places{RationalPlace::real(), RationalPlace::prime(2)};
  for (const auto& x : values) {
    if (x == 0) throw InvalidArgument("relevant places of zero");
    for (const Integer* part : {&x.get_num(), &x.get_den()}) {
      for (const auto& [p, e] : int_factor(*part).primes) {
        if (p != 2) places.push_back(RationalPlace::prime(p));
      }
    }
  }
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  return places;
}

ProductFormulaReport product_formula_check(const Rational& a, const Rational& b) {
  ProductFormulaReport report;
  for (const auto& v : relevant_places({a, b})) {
    SymbolValue s = hilbert_symbol(a, b, v);
    report.entries.push_back({v, s});
    report.product *= s.sign();
  }
  return report;
}

}  // namespace bmo
