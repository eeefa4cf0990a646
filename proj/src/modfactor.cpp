#include "modfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace bmo::detail {

namespace {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;  // coefficients mod p, lowest degree first

// Arithmetic in F_p[x] for p < 2^31.
class Fp {
 public:
  explicit Fp(u64 p) : p_(p) {}

  u64 prime() const { return p_; }

  u64 mul(u64 a, u64 b) const { return a * b % p_; }
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p_;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p_ - 2); }

  static void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  static int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

  FpPoly reduce(const ZPoly& f) const {
    FpPoly out(f.size());
    mpz_class m;
    for (std::size_t i = 0; i < f.size(); ++i) {
      mpz_fdiv_r_ui(m.get_mpz_t(), f[i].get_mpz_t(), p_);
      out[i] = m.get_ui();
    }
    trim(out);
    return out;
  }

  FpPoly add(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
  }
  FpPoly sub(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    trim(r);
    return r;
  }
  FpPoly scale(const FpPoly& a, u64 c) const {
    FpPoly r(a);
    for (auto& x : r) x = mul(x, c);
    trim(r);
    return r;
  }

  // b must be nonzero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) const {
    if (a.size() < b.size()) return {{}, a};
    FpPoly rem(a), quo(a.size() - b.size() + 1, 0);
    const u64 inv_lc = inv(b.back());
    const std::size_t db = b.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
      u64 c = mul(rem[k + db], inv_lc);
      quo[k] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) rem[k + j] = sub(rem[k + j], mul(c, b[j]));
    }
    rem.resize(db);
    trim(rem);
    trim(quo);
    return {quo, rem};
  }
  FpPoly mod(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }

  FpPoly monic(const FpPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }

  FpPoly gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
      FpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s, t with s*a + t*b = 1 for coprime a, b.
  std::pair<FpPoly, FpPoly> bezout(const FpPoly& a, const FpPoly& b) const {
    FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      FpPoly s2 = sub(s0, mul(q, s1));
      FpPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 c = inv(r0.back());
    return {scale(s0, c), scale(t0, c)};
  }

  FpPoly derivative(const FpPoly& a) const {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p_);
    trim(r);
    return r;
  }

  FpPoly powmod(FpPoly base, const mpz_class& e, const FpPoly& m) const {
    FpPoly r{1};
    base = mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mod(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i) != 0) r = mod(mul(r, base), m);
    }
    return r;
  }

 private:
  u64 p_;
};

// Distinct-degree factorization of a monic squarefree f: pairs (product of
// all irreducible factors of degree d, d).
std::vector<std::pair<FpPoly, int>> distinct_degree(const Fp& F, FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  const FpPoly x{0, 1};
  FpPoly h = x;
  for (int d = 1; 2 * d <= Fp::deg(f); ++d) {
    h = F.powmod(h, mpz_class(F.prime()), f);
    FpPoly g = F.gcd(f, F.sub(h, x));
    if (Fp::deg(g) > 0) {
      out.emplace_back(g, d);
      f = F.divmod(f, g).first;
      h = F.mod(h, f);
    }
  }
  if (Fp::deg(f) > 0) out.emplace_back(F.monic(f), Fp::deg(f));
  return out;
}

// Equal-degree splitting (odd p): all factors of g have degree d.
void equal_degree(const Fp& F, const FpPoly& g, int d, std::mt19937_64& rng,
                  std::vector<FpPoly>& out) {
  if (Fp::deg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), F.prime(), static_cast<unsigned long>(d));
  const mpz_class e = (pd - 1) / 2;
  std::uniform_int_distribution<u64> coin(0, F.prime() - 1);
  for (;;) {
    FpPoly a(static_cast<std::size_t>(Fp::deg(g)));
    for (auto& c : a) c = coin(rng);
    Fp::trim(a);
    if (Fp::deg(a) < 1) continue;
    FpPoly b = F.sub(F.powmod(a, e, g), FpPoly{1});
    FpPoly h = F.gcd(g, b);
    if (Fp::deg(h) > 0 && Fp::deg(h) < Fp::deg(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

bool is_small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Symmetric residue of v modulo m.
mpz_class symmetric(const mpz_class& v, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

ZPoly lift_to_z(const FpPoly& f) {
  ZPoly r;
  r.reserve(f.size());
  for (u64 c : f) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void zreduce(ZPoly& a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact division over Z; nullopt-like empty result signalled by ok=false.
bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (a.size() < b.size()) return false;
  ZPoly rem(a);
  ZPoly quo(a.size() - b.size() + 1, mpz_class(0));
  const std::size_t db = b.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const mpz_class& top = rem[k + db];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t()) == 0) return false;
    mpz_class c = top / b.back();
    quo[k] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) return false;
  }
  quotient = std::move(quo);
  return true;
}

ZPoly primitive(ZPoly a) {
  mpz_class g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Lifts f = g0 * h0 (mod p), g0 monic, f monic over Z/p^k, to a factorization
// modulo p^k with monic factors of the same degrees.
std::pair<ZPoly, ZPoly> hensel_two(const Fp& F, const ZPoly& f, const FpPoly& g0,
                                   const FpPoly& h0, int k) {
  const mpz_class p(static_cast<unsigned long>(F.prime()));
  auto [s, t] = F.bezout(g0, h0);
  ZPoly G = lift_to_z(g0), H = lift_to_z(h0);
  mpz_class pj = p;
  for (int j = 1; j < k; ++j) {
    mpz_class pj1 = pj * p;
    ZPoly diff(f);
    ZPoly gh = zmul(G, H);
    diff.resize(std::max(diff.size(), gh.size()), mpz_class(0));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    zreduce(diff, pj1);
    for (auto& c : diff) c /= pj;  // exact: f == G*H mod p^j
    FpPoly e = F.reduce(diff);
    auto [q, r] = F.divmod(F.mul(t, e), g0);
    FpPoly dh = F.add(F.mul(s, e), F.mul(q, h0));
    ZPoly R = lift_to_z(r), DH = lift_to_z(dh);
    G.resize(std::max(G.size(), R.size()), mpz_class(0));
    for (std::size_t i = 0; i < R.size(); ++i) G[i] += pj * R[i];
    H.resize(std::max(H.size(), DH.size()), mpz_class(0));
    for (std::size_t i = 0; i < DH.size(); ++i) H[i] += pj * DH[i];
    zreduce(G, pj1);
    zreduce(H, pj1);
    pj = pj1;
  }
  return {G, H};
}

std::vector<ZPoly> hensel_lift(const Fp& F, const ZPoly& f, const std::vector<FpPoly>& factors,
                               int k) {
  if (factors.size() == 1) return {f};
  FpPoly rest{1};
  for (std::size_t i = 1; i < factors.size(); ++i) rest = F.mul(rest, factors[i]);
  auto [G, H] = hensel_two(F, f, factors[0], rest, k);
  std::vector<ZPoly> out{G};
  std::vector<FpPoly> tail(factors.begin() + 1, factors.end());
  for (auto& z : hensel_lift(F, H, tail, k)) out.push_back(std::move(z));
  return out;
}

}  // namespace

std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const mpz_class lc = f.back();

  // Pick the prime among the first few suitable ones giving fewest factors.
  std::mt19937_64 rng(0x5eed);
  u64 best_p = 0;
  std::vector<FpPoly> best_factors;
  int tried = 0;
  for (u64 p = 3; tried < 6 && p < 2000; p += 2) {
    if (!is_small_prime(p)) continue;
    Fp F(p);
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p) != 0) continue;
    FpPoly fp = F.monic(F.reduce(f));
    if (Fp::deg(F.gcd(fp, F.derivative(fp))) > 0) continue;
    ++tried;
    std::vector<FpPoly> factors;
    for (auto& [g, d] : distinct_degree(F, fp)) equal_degree(F, g, d, rng, factors);
    if (best_p == 0 || factors.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(factors);
    }
    if (best_factors.size() == 1) return {f};
  }
  Fp F(best_p);
  const mpz_class p(static_cast<unsigned long>(best_p));

  // Mignotte: every factor g, rescaled to leading coefficient lc, has
  // coefficients bounded by |lc| * 2^n * ||f||_2.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class bound = sqrt(norm2) + 1;
  bound *= abs(lc);
  bound <<= n;
  int k = 1;
  mpz_class pk = p;
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }

  // Monic associate of f modulo p^k.
  mpz_class lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  ZPoly fm(f);
  for (auto& c : fm) c *= lc_inv;
  zreduce(fm, pk);

  std::vector<ZPoly> lifted = hensel_lift(F, fm, best_factors, k);

  std::vector<ZPoly> result;
  ZPoly current = f;
  std::size_t subset_size = 1;
  while (2 * subset_size <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<bool> pick(r, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(subset_size), true);
    do {
      ZPoly cand{current.back()};
      for (std::size_t i = 0; i < r; ++i) {
        if (pick[i]) {
          cand = zmul(cand, lifted[i]);
          zreduce(cand, pk);
        }
      }
      for (auto& c : cand) c = symmetric(c, pk);
      while (!cand.empty() && cand.back() == 0) cand.pop_back();
      if (cand.size() < 2) continue;
      cand = primitive(cand);
      ZPoly quotient;
      if (zdivide(current, cand, quotient)) {
        result.push_back(cand);
        current = std::move(quotient);
        std::vector<ZPoly> remaining;
        for (std::size_t i = 0; i < r; ++i) {
          if (!pick[i]) remaining.push_back(std::move(lifted[i]));
        }
        lifted = std::move(remaining);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++subset_size;
  }
  if (current.size() > 1) result.push_back(primitive(current));
  return result;
}

}  // namespace bmo::detail
