#pragma once

// Brute-force reference computations for the test suites. None of these
// call into the library's symbol or residue formulas.

#include <cstdint>
#include <vector>

#include "bmo/exactalg.hpp"

namespace oracle {

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline int vp(std::int64_t n, std::int64_t p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Integer in the same square class as a over Q_p with v_p in {0, 1}.
inline bmo::Integer normalize(const bmo::Rational& a, long p) {
  bmo::Integer n = a.get_num() * a.get_den();
  const bmo::Integer p2 = bmo::Integer(p) * p;
  while (n % p2 == 0) n /= p2;
  return n;
}

// Solvability of z^2 = a x^2 + b y^2 with (x, y, z) != 0 over Q_p, by
// exhaustive search over points (x : y) of P^1(Z/p^k). A value n of the form
// is accepted when its square class is fixed by its residue mod p^k: n != 0,
// v_p(n) even, and v_p(n) <= k - 1 (odd p) or <= k - 3 (p = 2) so that the
// unit part is known mod p or mod 8. Squares of units mod p and mod 8 come
// from enumeration.
class LocalSolvability {
 public:
  LocalSolvability(long p, int k) : p_(p), mod_(ipow(p, k)) {
    const std::int64_t unit_mod = p == 2 ? 8 : p;
    unit_square_.assign(unit_mod, false);
    for (std::int64_t z = 1; z < unit_mod; ++z) {
      if (z % p != 0) unit_square_[(z * z) % unit_mod] = true;
    }
    const int slack = p == 2 ? 3 : 1;
    accept_.assign(mod_, false);
    for (std::int64_t r = 1; r < mod_; ++r) {
      const int v = vp(r, p);
      if (v % 2 != 0 || v > k - slack) continue;
      const std::int64_t unit = r / ipow(p, v);
      accept_[r] = unit_square_[unit % unit_mod];
    }
  }

  bool solvable(const bmo::Rational& a, const bmo::Rational& b) const {
    const std::int64_t am = reduce(normalize(a, p_));
    const std::int64_t bm = reduce(normalize(b, p_));
    // (1 : y) for every y, then (x : 1) with p | x.
    for (std::int64_t y = 0; y < mod_; ++y) {
      if (accept_[(am + bm * ((y * y) % mod_)) % mod_]) return true;
    }
    for (std::int64_t x = 0; x < mod_; x += p_) {
      if (accept_[(am * ((x * x) % mod_) + bm) % mod_]) return true;
    }
    return false;
  }

 private:
  std::int64_t reduce(const bmo::Integer& n) const {
    bmo::Integer r = n % mod_;
    if (r < 0) r += mod_;
    return r.get_si();
  }

  long p_;
  std::int64_t mod_;
  std::vector<bool> unit_square_;
  std::vector<bool> accept_;
};

// Precision used per prime: 2^10 for p = 2, p^3 otherwise. Isotropic forms at
// 2 can need n with v_2(n) = 4 before a square value appears.
inline LocalSolvability solvability_oracle(long p) { return LocalSolvability(p, p == 2 ? 10 : 3); }

// Real place: z^2 = a x^2 + b y^2 has a nonzero real solution unless the form
// is negative definite.
inline bool real_solvable(const bmo::Rational& a, const bmo::Rational& b) {
  return a > 0 || b > 0;
}

// All F2-combinations of generators, as XOR of bitmasks; true when target is hit.
inline bool in_span_bruteforce(std::uint64_t target, const std::vector<std::uint64_t>& gens) {
  const std::size_t n = gens.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) acc ^= gens[i];
    }
    if (acc == target) return true;
  }
  return false;
}

inline bool independent_bruteforce(const std::vector<std::uint64_t>& gens) {
  const std::size_t n = gens.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) acc ^= gens[i];
    }
    if (acc == 0) return false;
  }
  return true;
}

}  // namespace oracle
