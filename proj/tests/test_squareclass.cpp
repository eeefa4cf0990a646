#include <doctest.h>

#include <map>
#include <random>

#include "bmo/errors.hpp"
#include "bmo/squareclass.hpp"
#include "oracles.hpp"

using namespace bmo;

namespace {

const Polynomial t = Polynomial::t();
constexpr FieldMode Q = FieldMode::RationalConstants;
constexpr FieldMode C = FieldMode::ConstantsAreSquares;

// Bitmask encoding of a pair over a basis index shared across calls.
struct Encoder {
  std::map<std::string, int> index;
  std::uint64_t bits(const SquareClassVector& v, int offset) {
    std::uint64_t out = 0;
    for (const auto& b : v.coordinates()) {
      auto [it, fresh] = index.emplace(b.to_string(), static_cast<int>(index.size()));
      (void)fresh;
      out |= std::uint64_t{1} << (2 * it->second + offset);
    }
    return out;
  }
  std::uint64_t operator()(const SquareClassPair& p) { return bits(p.first, 0) | bits(p.second, 1); }
};

}  // namespace

TEST_CASE("classes over Q(t), C(t) and Q") {
  const RationalFunction p = Polynomial(3) * (t - 1).pow(3) * (t + 3);
  CHECK(class_of(p, Q).to_string() == "{3, t-1, t+3}");
  CHECK(class_of(p, C).to_string() == "{t-1, t+3}");
  CHECK(class_of(-p, Q).to_string() == "{-1, 3, t-1, t+3}");
  CHECK(class_of(RationalFunction(144) * t, Q).to_string() == "{t}");
  CHECK(class_of(RationalFunction(Polynomial(2), t * t + 1), Q).to_string() == "{2, t^2+1}");
  CHECK(class_of(Rational(-12, 5), FieldMode::RationalsOnly).to_string() == "{-1, 3, 5}");
  CHECK(class_of(RationalFunction(Rational(9, 4)), Q).is_zero());
  CHECK(class_of(RationalFunction(-7), C).is_zero());
  CHECK_THROWS_AS(class_of(RationalFunction(0), Q), InvalidArgument);
  CHECK_THROWS_AS(class_of(RationalFunction(t), FieldMode::RationalsOnly), InvalidArgument);
  CHECK_THROWS_AS(class_of(RationalFunction(t), Q) + class_of(RationalFunction(t), C),
                  InvalidArgument);
}

TEST_CASE("class_of is a homomorphism") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> c(-5, 5);
  auto poly = [&] {
    std::vector<Rational> v;
    const int deg = static_cast<int>(rng() % 4);
    for (int i = 0; i <= deg; ++i) v.emplace_back(c(rng));
    if (v.back() == 0) v.back() = 3;
    return Polynomial(std::move(v));
  };
  for (int i = 0; i < 150; ++i) {
    const RationalFunction f(poly(), poly()), g(poly(), poly());
    if (f.is_zero() || g.is_zero()) continue;
    for (FieldMode m : {Q, C}) {
      CHECK(class_of(f * g, m) == class_of(f, m) + class_of(g, m));
      CHECK(class_of(f * f, m).is_zero());
    }
  }
}

TEST_CASE("span and independence agree with exhaustive enumeration") {
  std::mt19937 rng(4);
  const std::vector<RationalFunction> atoms{-1, 2, 3, t, t - 1, t + 1, t * t + 1, t + 3};
  auto random_vector = [&](FieldMode m) {
    RationalFunction f = 1;
    for (const auto& a : atoms) {
      if (rng() % 3 == 0) f = f * a;
    }
    return class_of(f, m);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const FieldMode m = trial % 2 == 0 ? Q : C;
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<SquareClassPair> gens;
    for (int i = 0; i < n; ++i) gens.push_back({random_vector(m), random_vector(m)});
    SquareClassPair target{random_vector(m), random_vector(m)};
    if (trial % 3 == 0) target = gens[0] + gens[n - 1];

    Encoder enc;
    std::vector<std::uint64_t> masks;
    for (const auto& g : gens) masks.push_back(enc(g));
    const std::uint64_t tmask = enc(target);

    const auto cert = in_span(target, gens);
    CHECK(cert.has_value() == oracle::in_span_bruteforce(tmask, masks));
    if (cert) {
      SquareClassPair sum{SquareClassVector(m), SquareClassVector(m)};
      for (int i = 0; i < n; ++i) {
        if (cert->coefficients[i]) sum = sum + gens[i];
      }
      CHECK(sum == target);
    }
    CHECK(independent(gens) == oracle::independent_bruteforce(masks));
  }
}
