// SPDX-License-Identifier: Apache-2.0
//
// Counting levels, comparators and additions of prime-partitioned networks.
//
// With n = f_1 * ... * f_m (f_1 <= ... <= f_m prime), the prime network has
// n / (f_1 ... f_i) levels of f_i-ary comparators for each i, each level
// holding n / f_i comparators. Everything is exact integer arithmetic.
#pragma once

#include <cstdint>
#include <map>

namespace ranknet {

/// prime -> count, ordered by prime.
using PrimeCounts = std::map<std::uint64_t, std::uint64_t>;

/// Levels per prime arity, grouped by unique prime. n >= 2.
PrimeCounts level_coefficients(std::uint64_t n);

/// Comparators per prime arity. n >= 2.
PrimeCounts comparator_coefficients(std::uint64_t n);

/// Number of partial-rank vectors summed at the end (levels). n >= 2.
std::uint64_t partial_rank_count(std::uint64_t n);

/// partial_rank_count(n) - 1.
std::uint64_t addition_complexity(std::uint64_t n);

/// Total comparators regardless of arity; 0 for n = 1.
std::uint64_t total_comparators(std::uint64_t n);

/// a(1) = 0, a(n) = max over divisors d > 1 of d * a(n/d) + 1.
///
/// Evaluated by the recurrence over every nontrivial divisor with a shared,
/// mutex-guarded memo.
std::uint64_t maundy_a(std::uint64_t n);

/// (p^k - 1) / (p - 1). Throws DomainError unless p is prime and k >= 1.
std::uint64_t prime_power_levels(std::uint64_t p, unsigned k);

/// Level coefficients of p1^k1 * p2^k2 in closed form. Needs p1 < p2 prime.
PrimeCounts two_prime_levels(std::uint64_t p1, unsigned k1, std::uint64_t p2, unsigned k2);

/// n(n-1)/2.
std::uint64_t binary_equivalent(std::uint64_t n);

struct ComplexityProfile {
  std::uint64_t n = 0;
  PrimeCounts level_coeffs;
  PrimeCounts comparator_coeffs;
  std::uint64_t partial_rank_count = 0;
  std::uint64_t addition_complexity = 0;
  std::uint64_t total_comparators = 0;
  std::uint64_t binary_equivalent = 0;
};

ComplexityProfile complexity_profile(std::uint64_t n);

/// Largest n accepted by the counting functions; keeps n^2 within 64 bits.
inline constexpr std::uint64_t kMaxAnalyticsN = 0xFFFFFFFFull;

}  // namespace ranknet
