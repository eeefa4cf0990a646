#pragma once

// Candidate enumeration and bulk local evaluation. Each kernel comes in a
// serial reference form and an OpenMP form producing identical output.

#include <cstdint>
#include <span>
#include <vector>

#include "bmo/brauer.hpp"

namespace bmo {

struct SampleCandidate {
  Rational t0;
  Rational x0;
};

enum class SampleOutcome : std::uint8_t { NotLocal, Vanishes, Half, Degenerate };

/// Reduced fractions a/b with |a| <= h, 1 <= b <= h and max(|a|, b) == h,
/// in canonical order.
std::vector<Rational> rationals_of_height(int h);

/// Pairs (t0, x0) whose larger height is exactly h, ordered by t0 then x0.
/// t0 values listed in `excluded_t` are skipped.
std::vector<SampleCandidate> candidates_of_height(int h, const std::vector<Rational>& excluded_t);

std::vector<SampleOutcome> evaluate_candidates_serial(const BrauerClass& c,
                                                      const RationalPlace& place,
                                                      std::span<const SampleCandidate> batch);

std::vector<SampleOutcome> evaluate_candidates_parallel(const BrauerClass& c,
                                                        const RationalPlace& place,
                                                        std::span<const SampleCandidate> batch);

/// The pairs (a, b) with 1 <= |a|, |b| <= bound, evaluated at each place;
/// +1/-1 per entry, row-major over a then b, then place.
std::vector<int> hilbert_table_serial(int bound, std::span<const RationalPlace> places);
std::vector<int> hilbert_table_parallel(int bound, std::span<const RationalPlace> places);

}  // namespace bmo
