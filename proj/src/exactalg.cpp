#include "bmo/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "bmo/errors.hpp"
#include "modfactor.hpp"

namespace bmo {

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& a) { return a.get_str(); }

Rational parse_rational(const std::string& raw) {
  const auto first = raw.find_first_not_of(" \t");
  const std::string text =
      first == std::string::npos ? std::string() : raw.substr(first, raw.find_last_not_of(" \t") - first + 1);
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw InvalidArgument("not a rational number: '" + text + "'");
  Integer num(text.substr(i, num_end - i));
  if (text[0] == '-') num = -num;
  Integer den = 1;
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw InvalidArgument("not a rational number: '" + text + "'");
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size()) {
      throw InvalidArgument("not a rational number: '" + text + "'");
    }
    den = Integer(text.substr(num_end + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::strong_ordering canonical_compare(const Rational& a, const Rational& b) {
  int c = cmp(abs(a), abs(b));
  if (c == 0) c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::t() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  std::vector<Rational> v(coeffs_);
  for (auto& c : v) c *= inv;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::reflected() const {
  std::vector<Rational> v(coeffs_);
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::reversed() const {
  std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1), base(*this);
  while (exponent) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent) base *= base;
  }
  return result;
}

std::pair<Rational, std::vector<Integer>> Polynomial::primitive_integer() const {
  if (is_zero()) return {Rational(0), {}};
  Integer l = 1;
  for (const auto& c : coeffs_) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  Integer g = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (l / c.get_den());
    g = gcd(g, v);
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) g = -g;
  for (auto& v : ints) v /= g;
  Rational scale(g, l);
  scale.canonicalize();
  return {scale, std::move(ints)};
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v(coeffs_);
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem(a.coeffs_);
  std::vector<Rational> quo(a.coeffs_.size() - b.coeffs_.size() + 1, Rational(0));
  const Rational inv = 1 / b.leading();
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational c = rem[k + db] * inv;
    quo[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs_[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) {
  return Polynomial::divmod(a, b).first;
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) {
  return Polynomial::divmod(a, b).second;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    Rational m = abs(c);
    if (k == 0) {
      out += bmo::to_string(m);
      continue;
    }
    if (m != 1) out += bmo::to_string(m) + "*";
    out += 't';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    auto c = canonical_compare(a.coefficients()[i], b.coefficients()[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  Polynomial a = f.monic(), b = g.monic();
  while (!b.is_zero()) {
    Polynomial r = (a % b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Integer factorization

namespace {

Integer pollard_brent(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](const Integer& v) {
      Integer w = v * v + c;
      return Integer(w % n);
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into_primes(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  split_into_primes(d, out);
  split_into_primes(Integer(n / d), out);
}

}  // namespace

IntegerFactorization int_factor(const Integer& n) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  IntegerFactorization result;
  result.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  std::vector<Integer> primes;
  auto strip = [&](unsigned long p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      m /= p;
      primes.emplace_back(p);
    }
  };
  strip(2);
  strip(3);
  for (unsigned long p = 5; p <= 100000 && Integer(p) * p <= m; p += 6) {
    strip(p);
    strip(p + 2);
  }
  split_into_primes(m, primes);
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) {
    if (!result.primes.empty() && result.primes.back().first == p) {
      ++result.primes.back().second;
    } else {
      result.primes.emplace_back(p, 1);
    }
  }
  return result;
}

bool rat_is_square(const Rational& a) {
  if (a == 0) throw InvalidArgument("square test of zero");
  return a > 0 && mpz_perfect_square_p(a.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(a.get_den_mpz_t()) != 0;
}

int p_valuation(const Rational& a, const Integer& p) {
  if (a == 0) throw InvalidArgument("valuation of zero");
  int v = 0;
  Integer n = a.get_num(), d = a.get_den();
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
    n /= p;
    ++v;
  }
  while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) != 0) {
    d /= p;
    --v;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Polynomial factorization

namespace {

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> ds{1};
  for (const auto& [p, e] : int_factor(n).primes) {
    const std::size_t base = ds.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

// Yun's squarefree decomposition of a monic polynomial: f = prod a_i^i.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
  std::vector<std::pair<Polynomial, int>> out;
  if (f.degree() < 1) return out;
  Polynomial df = f.derivative();
  Polynomial a0 = poly_gcd(f, df);
  Polynomial b = f / a0;
  Polynomial c = df / a0;
  Polynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Polynomial a = poly_gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    ++i;
  }
  return out;
}

Polynomial from_integers(const std::vector<Integer>& v) {
  std::vector<Rational> r;
  r.reserve(v.size());
  for (const auto& c : v) r.emplace_back(c);
  return Polynomial(std::move(r));
}

// Irreducible monic factors of a monic squarefree polynomial.
std::vector<Polynomial> factor_squarefree(Polynomial f) {
  std::vector<Polynomial> out;
  if (f.degree() <= 1) {
    if (f.degree() == 1) out.push_back(f);
    return out;
  }
  if (f.coefficient(0) == 0) {
    out.push_back(Polynomial::t());
    f = f / Polynomial::t();
  }
  // Rational roots n/d of the primitive integer form: n | constant, d | leading.
  if (f.degree() >= 1) {
    auto [scale, ints] = f.primitive_integer();
    const auto nums = divisors(ints.front());
    const auto dens = divisors(ints.back());
    for (const auto& d : dens) {
      for (const auto& n : nums) {
        for (int sign : {1, -1}) {
          if (f.degree() < 1) break;
          Rational r(sign * n, d);
          r.canonicalize();
          if (r.get_den() != d) continue;  // already tried in lower terms
          if (f(r) == 0) {
            out.push_back(Polynomial::linear(r));
            f = f / Polynomial::linear(r);
          }
        }
      }
    }
  }
  if (f.degree() >= 4) {
    auto [scale, ints] = f.primitive_integer();
    for (const auto& g : detail::factor_squarefree_integer(ints)) {
      out.push_back(from_integers(g).monic());
    }
  } else if (f.degree() >= 1) {
    out.push_back(f.monic());
  }
  return out;
}

}  // namespace

Polynomial Factorization::expand() const {
  Polynomial acc(unit);
  for (const auto& [p, e] : factors) acc *= p.pow(static_cast<unsigned>(e));
  return acc;
}

Factorization poly_factor(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  Factorization result{f.leading(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(f.monic())) {
    for (auto& irr : factor_squarefree(part)) result.factors.emplace_back(std::move(irr), mult);
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
    return canonical_compare(a.first, b.first) < 0;
  });
  return result;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw InvalidArgument("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = poly_gcd(num, den);
  Polynomial n = num / g, d = den / g;
  Rational lc = d.leading();
  num_ = n * Polynomial(1 / lc);
  den_ = d.monic();
}

std::optional<Rational> RationalFunction::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) return std::nullopt;
  return num_(x) / d;
}

RationalFunction RationalFunction::reflected() const {
  return RationalFunction(num_.reflected(), den_.reflected());
}

RationalFunction RationalFunction::pow(int exponent) const {
  if (exponent >= 0) {
    return RationalFunction(num_.pow(static_cast<unsigned>(exponent)),
                            den_.pow(static_cast<unsigned>(exponent)));
  }
  if (is_zero()) throw InvalidArgument("negative power of zero");
  auto e = static_cast<unsigned>(-exponent);
  return RationalFunction(den_.pow(e), num_.pow(e));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::strong_ordering canonical_compare(const RationalFunction& a, const RationalFunction& b) {
  auto c = canonical_compare(a.numerator(), b.numerator());
  if (c != 0) return c;
  return canonical_compare(a.denominator(), b.denominator());
}

}  // namespace bmo
