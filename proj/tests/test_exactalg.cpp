#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "bmo/errors.hpp"
#include "bmo/exactalg.hpp"

using namespace bmo;

namespace {

const Polynomial t = Polynomial::t();

Polynomial poly(std::initializer_list<int> low_to_high) {
  std::vector<Rational> c;
  for (int x : low_to_high) c.emplace_back(x);
  return Polynomial(std::move(c));
}

std::map<std::string, int> as_map(const Factorization& f) {
  std::map<std::string, int> out;
  for (const auto& [g, e] : f.factors) out[g.to_string()] += e;
  return out;
}

// Rational roots by brute force over +-d/n with d | a0 and n | an, integer
// coefficients only.
bool has_rational_root(const Polynomial& f) {
  auto [scale, z] = f.primitive_integer();
  (void)scale;
  if (z.front() == 0) return true;
  auto divisors = [](Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        out.push_back(n / d);
      }
    }
    return out;
  };
  for (const auto& num : divisors(z.front())) {
    for (const auto& den : divisors(z.back())) {
      for (int s : {1, -1}) {
        Rational r(Integer(s * num), den);
        r.canonicalize();
        if (f(r) == 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("rationals print, parse and order canonically") {
  Rational half(-3, 6);
  half.canonicalize();
  CHECK(to_string(half) == "-1/2");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK(canonical_compare(Rational(-1), Rational(1)) < 0);
  CHECK(canonical_compare(Rational(-1), Rational(3)) < 0);
  CHECK(canonical_compare(Rational(-3), Rational(3)) < 0);
  CHECK(canonical_compare(Rational(0), Rational(-1)) < 0);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p = Polynomial(3) * (t - 1).pow(3) * (t + 3);
  CHECK(p == poly({-9, 24, -18, 0, 3}));
  CHECK(p.reflected() == poly({-9, -24, -18, 0, 3}));
  CHECK(p - p.reflected() == Polynomial(48) * t);
  CHECK(p.degree() == 4);
  CHECK(Polynomial().degree() == -1);
  CHECK(p.leading() == 3);
  CHECK(p(1) == 0);
  CHECK(p(2) == 15);
  CHECK(p.reflected()(2) == -81);
  CHECK(p.derivative() == poly({24, -36, 0, 12}));
  CHECK(poly({1, 2, 3}).reversed() == poly({3, 2, 1}));
  CHECK(p.to_string() == "3*t^4-18*t^2+24*t-9");
  CHECK((Polynomial(Rational(1, 2)) * t - 1).to_string() == "1/2*t-1");
  const auto [q, r] = Polynomial::divmod(p, t * t + 1);
  CHECK(q * (t * t + 1) + r == p);
  CHECK(r.degree() < 2);
  CHECK_THROWS_AS(Polynomial::divmod(p, Polynomial()), InvalidArgument);
  CHECK(poly_gcd(p, p.derivative()) == (t - 1).pow(2));
  CHECK(poly_gcd(Polynomial(), Polynomial(5) * t) == t);
  CHECK_THROWS_AS(poly_gcd(Polynomial(), Polynomial()), InvalidArgument);
}

TEST_CASE("polynomial canonical order") {
  std::vector<Polynomial> v{Polynomial::linear(-3), Polynomial::linear(1), t,
                            Polynomial::linear(3), Polynomial::linear(-1)};
  std::sort(v.begin(), v.end(), CanonicalLess{});
  std::vector<std::string> names;
  for (const auto& f : v) names.push_back(f.to_string());
  CHECK(names == std::vector<std::string>{"t", "t-1", "t+1", "t-3", "t+3"});
}

TEST_CASE("factorization of known products") {
  CHECK(as_map(poly_factor(t.pow(4) + 4)) ==
        std::map<std::string, int>{{"t^2-2*t+2", 1}, {"t^2+2*t+2", 1}});
  CHECK(as_map(poly_factor(t.pow(8) - 1)) ==
        std::map<std::string, int>{{"t-1", 1}, {"t+1", 1}, {"t^2+1", 1}, {"t^4+1", 1}});
  const Factorization sd = poly_factor(t.pow(4) - Polynomial(10) * t * t + 1);
  CHECK(sd.factors.size() == 1);
  const Polynomial p = Polynomial(3) * (t - 1).pow(3) * (t + 3);
  const Factorization fp = poly_factor(p);
  CHECK(fp.unit == 3);
  CHECK(as_map(fp) == std::map<std::string, int>{{"t-1", 3}, {"t+3", 1}});
  CHECK_THROWS_AS(poly_factor(Polynomial()), InvalidArgument);
  CHECK(poly_factor(Polynomial(Rational(5, 7))).factors.empty());
}

TEST_CASE("factorization recovers products of certified irreducibles") {
  // Irreducible by Eisenstein, cyclotomy, degree <= 3 without roots, or a
  // classical irreducibility result.
  const std::vector<Polynomial> pool{
      t, t - 1, t + 2, Polynomial(2) * t - 3, t * t + 1, t * t - 2, t * t + t + 1,
      t.pow(3) - 2, t.pow(3) + Polynomial(3) * t + 3, t.pow(4) + 1,
      t.pow(4) + t.pow(3) + t * t + t + 1, t.pow(4) - Polynomial(10) * t * t + 1,
      t.pow(5) - Polynomial(6) * t + 3, t.pow(6) + t.pow(3) + 1};
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    std::map<std::string, int> expect;
    Rational c(static_cast<int>(rng() % 9) + 1, static_cast<int>(rng() % 5) + 1);
    c.canonicalize();
    Polynomial f(c);
    Rational lead_product = f.leading();
    while (f.degree() < 8) {
      const Polynomial& g = pool[rng() % pool.size()];
      if (f.degree() + g.degree() > 8) break;
      f *= g;
      lead_product *= g.leading();
      expect[g.monic().to_string()] += 1;
    }
    const Factorization got = poly_factor(f);
    CHECK(as_map(got) == expect);
    CHECK(got.unit == lead_product);
    CHECK(got.expand() == f);
  }
}

TEST_CASE("random polynomials of degree <= 8 round-trip through factorization") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    // Products of two random factors give composite inputs most of the time.
    auto random_poly = [&](int deg) {
      std::vector<Rational> c;
      for (int i = 0; i <= deg; ++i) c.emplace_back(coeff(rng));
      if (c.back() == 0) c.back() = 1;
      return Polynomial(std::move(c));
    };
    const int d1 = 1 + static_cast<int>(rng() % 4);
    const int d2 = 1 + static_cast<int>(rng() % (8 - d1));
    Polynomial f = random_poly(d1) * random_poly(d2);
    if (f.is_zero()) continue;
    const Factorization got = poly_factor(f);
    CHECK(got.expand() == f);
    for (std::size_t i = 0; i < got.factors.size(); ++i) {
      const auto& [g, e] = got.factors[i];
      CHECK(e >= 1);
      CHECK(g.leading() == 1);
      CHECK(g.degree() >= 1);
      if (g.degree() >= 2 && g.degree() <= 3) CHECK_FALSE(has_rational_root(g));
      for (std::size_t j = i + 1; j < got.factors.size(); ++j) {
        CHECK(poly_gcd(g, got.factors[j].first) == 1);
      }
    }
  }
}

TEST_CASE("integer factoring and squares") {
  const IntegerFactorization f = int_factor(Integer("600851475143"));
  CHECK(f.sign == 1);
  CHECK(f.primes == std::vector<std::pair<Integer, int>>{
                        {71, 1}, {839, 1}, {1471, 1}, {6857, 1}});
  const IntegerFactorization g = int_factor(Integer("-100000000520000000627"));
  CHECK(g.sign == -1);
  CHECK(g.primes == std::vector<std::pair<Integer, int>>{{Integer("10000000019"), 1},
                                                         {Integer("10000000033"), 1}});
  CHECK(int_factor(Integer("2305843009213693951")).primes.size() == 1);
  CHECK(int_factor(Integer(-72)).primes == std::vector<std::pair<Integer, int>>{{2, 3}, {3, 2}});
  CHECK(int_factor(Integer(1)).primes.empty());
  CHECK_THROWS_AS(int_factor(Integer(0)), InvalidArgument);
  CHECK(rat_is_square(Rational(9, 4)));
  CHECK_FALSE(rat_is_square(Rational(-9, 4)));
  CHECK_FALSE(rat_is_square(Rational(8)));
  CHECK(p_valuation(Rational(24, 5), 2) == 3);
  CHECK(p_valuation(Rational(24, 5), 5) == -1);
}

TEST_CASE("rational functions") {
  const RationalFunction f(t * t - 1, Polynomial(2) * t - 2);
  CHECK(f.numerator() == Polynomial(Rational(1, 2)) * (t + 1));
  CHECK(f.denominator() == 1);
  CHECK(f == RationalFunction(Polynomial(Rational(1, 2)) * (t + 1)));
  const RationalFunction g(Polynomial(1), t);
  CHECK_FALSE(g(0).has_value());
  CHECK(*g(2) == Rational(1, 2));
  CHECK((g * t) == RationalFunction(1));
  CHECK(g.pow(-2) == RationalFunction(t * t));
  CHECK(g.reflected() == RationalFunction(Polynomial(-1), t));
  CHECK(g.to_string() == "(1)/(t)");
  CHECK_THROWS_AS(RationalFunction(t, Polynomial()), InvalidArgument);
  CHECK_THROWS_AS(g / RationalFunction(0), InvalidArgument);
}
