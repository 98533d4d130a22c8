// SPDX-License-Identifier: Apache-2.0
#include "ranknet/analytics.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ranknet/error.hpp"
#include "ranknet/netbuild.hpp"

namespace ranknet {

namespace {

void require_n(std::uint64_t n, std::uint64_t min) {
  if (n < min) throw DimensionError("n must be >= " + std::to_string(min) + ", got " + std::to_string(n));
  if (n > kMaxAnalyticsN) throw DomainError("n too large for exact 64-bit counting");
}

// Unique primes p_1 < ... < p_r with their powers.
std::vector<std::pair<std::uint64_t, unsigned>> prime_powers(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (auto f : ascending_factorization(n)) {
    if (!out.empty() && out.back().first == f) {
      ++out.back().second;
    } else {
      out.emplace_back(f, 1u);
    }
  }
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t geometric(std::uint64_t p, unsigned k) { return (ipow(p, k) - 1) / (p - 1); }

}  // namespace

PrimeCounts level_coefficients(std::uint64_t n) {
  require_n(n, 2);
  PrimeCounts out;
  std::uint64_t consumed = 1;
  for (auto [p, k] : prime_powers(n)) {
    consumed *= ipow(p, k);
    out[p] = (n / consumed) * geometric(p, k);
  }
  return out;
}

PrimeCounts comparator_coefficients(std::uint64_t n) {
  auto out = level_coefficients(n);
  for (auto& [p, count] : out) count *= n / p;
  return out;
}

std::uint64_t partial_rank_count(std::uint64_t n) {
  require_n(n, 2);
  std::uint64_t total = 0;
  std::uint64_t prefix = 1;
  for (auto f : ascending_factorization(n)) {
    prefix *= f;
    total += n / prefix;
  }
  return total;
}

std::uint64_t addition_complexity(std::uint64_t n) { return partial_rank_count(n) - 1; }

std::uint64_t total_comparators(std::uint64_t n) {
  require_n(n, 1);
  if (n == 1) return 0;
  std::uint64_t total = 0;
  std::uint64_t prefix = 1;
  for (auto f : ascending_factorization(n)) {
    prefix *= f;
    // n^2 / (f * prefix) with both factors exact.
    total += (n / prefix) * (n / f);
  }
  return total;
}

namespace {

class MaundyMemo {
 public:
  std::uint64_t get(std::uint64_t n) {
    if (n == 1) return 0;
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    }
    std::uint64_t best = 0;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
      if (n % d != 0) continue;
      best = std::max(best, d * get(n / d) + 1);
      best = std::max(best, (n / d) * get(d) + 1);
    }
    best = std::max(best, n * get(1) + 1);
    std::unique_lock lock(mutex_);
    memo_.emplace(n, best);
    return best;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

}  // namespace

std::uint64_t maundy_a(std::uint64_t n) {
  require_n(n, 1);
  static MaundyMemo memo;
  return memo.get(n);
}

std::uint64_t prime_power_levels(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (k == 0) throw DomainError("exponent must be >= 1");
  return geometric(p, k);
}

PrimeCounts two_prime_levels(std::uint64_t p1, unsigned k1, std::uint64_t p2, unsigned k2) {
  if (!is_prime(p1) || !is_prime(p2)) throw DomainError("both bases must be prime");
  if (p1 >= p2) throw DomainError("two_prime_levels needs p1 < p2");
  if (k1 == 0 || k2 == 0) throw DomainError("exponents must be >= 1");
  return {{p1, ipow(p2, k2) * geometric(p1, k1)}, {p2, geometric(p2, k2)}};
}

std::uint64_t binary_equivalent(std::uint64_t n) {
  if (n > kMaxAnalyticsN) throw DomainError("n too large for exact 64-bit counting");
  return n == 0 ? 0 : n * (n - 1) / 2;
}

ComplexityProfile complexity_profile(std::uint64_t n) {
  ComplexityProfile profile;
  profile.n = n;
  profile.level_coeffs = level_coefficients(n);
  profile.comparator_coeffs = comparator_coefficients(n);
  profile.partial_rank_count = partial_rank_count(n);
  profile.addition_complexity = profile.partial_rank_count - 1;
  profile.total_comparators = total_comparators(n);
  profile.binary_equivalent = binary_equivalent(n);
  return profile;
}

}  // namespace ranknet
