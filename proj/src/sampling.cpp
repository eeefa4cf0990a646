#include "bmo/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "bmo/errors.hpp"

namespace bmo {

std::vector<Rational> rationals_of_height(int h) {
  if (h < 1) return {};
  std::vector<Rational> out;
  for (int b = 1; b <= h; ++b) {
    for (int a = -h; a <= h; ++a) {
      if (std::max(std::abs(a), b) != h) continue;
      if (std::gcd(a, b) != 1) continue;
      out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<SampleCandidate> candidates_of_height(int h, const std::vector<Rational>& excluded_t) {
  std::vector<Rational> upto;  // heights 1..h, canonical order
  for (int k = 1; k <= h; ++k) {
    auto layer = rationals_of_height(k);
    upto.insert(upto.end(), layer.begin(), layer.end());
  }
  std::sort(upto.begin(), upto.end(), CanonicalLess{});
  const auto exact = rationals_of_height(h);
  auto is_exact = [&](const Rational& r) {
    return std::binary_search(exact.begin(), exact.end(), r, CanonicalLess{});
  };
  auto is_excluded = [&](const Rational& r) {
    return std::find(excluded_t.begin(), excluded_t.end(), r) != excluded_t.end();
  };

  std::vector<SampleCandidate> out;
  for (const auto& t0 : upto) {
    if (is_excluded(t0)) continue;
    const bool t_exact = is_exact(t0);
    for (const auto& x0 : upto) {
      if (t_exact || is_exact(x0)) out.push_back({t0, x0});
    }
  }
  return out;
}

namespace {

SampleOutcome evaluate_one(const BrauerClass& c, const RationalPlace& place,
                           const SampleCandidate& cand) {
  if (!on_curve_locally(c.curve(), cand.t0, cand.x0, place)) return SampleOutcome::NotLocal;
  try {
    const SymbolValue v = evaluate_local(c, SurfacePoint::affine(cand.t0, cand.x0, place));
    return v.is_half() ? SampleOutcome::Half : SampleOutcome::Vanishes;
  } catch (const DegeneratePoint&) {
    return SampleOutcome::Degenerate;
  }
}

}  // namespace

std::vector<SampleOutcome> evaluate_candidates_serial(const BrauerClass& c,
                                                      const RationalPlace& place,
                                                      std::span<const SampleCandidate> batch) {
  std::vector<SampleOutcome> out(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) out[i] = evaluate_one(c, place, batch[i]);
  return out;
}

std::vector<SampleOutcome> evaluate_candidates_parallel(const BrauerClass& c,
                                                        const RationalPlace& place,
                                                        std::span<const SampleCandidate> batch) {
  std::vector<SampleOutcome> out(batch.size());
  const auto n = static_cast<long>(batch.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) out[i] = evaluate_one(c, place, batch[i]);
  return out;
}

namespace {

int nonzero_from_index(int i, int bound) { return i < bound ? i - bound : i - bound + 1; }

}  // namespace

std::vector<int> hilbert_table_serial(int bound, std::span<const RationalPlace> places) {
  if (bound < 1) throw InvalidArgument("bound must be positive");
  const int side = 2 * bound;
  const std::size_t np = places.size();
  std::vector<int> out(static_cast<std::size_t>(side) * side * np);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const Rational a(nonzero_from_index(i, bound)), b(nonzero_from_index(j, bound));
      for (std::size_t k = 0; k < np; ++k) {
        out[(static_cast<std::size_t>(i) * side + j) * np + k] =
            hilbert_symbol(a, b, places[k]).sign();
      }
    }
  }
  return out;
}

std::vector<int> hilbert_table_parallel(int bound, std::span<const RationalPlace> places) {
  if (bound < 1) throw InvalidArgument("bound must be positive");
  const int side = 2 * bound;
  const std::size_t np = places.size();
  std::vector<int> out(static_cast<std::size_t>(side) * side * np);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const Rational a(nonzero_from_index(i, bound)), b(nonzero_from_index(j, bound));
      for (std::size_t k = 0; k < np; ++k) {
        out[(static_cast<std::size_t>(i) * side + j) * np + k] =
            hilbert_symbol(a, b, places[k]).sign();
      }
    }
  }
  return out;
}

}  // namespace bmo
