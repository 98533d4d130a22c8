// SPDX-License-Identifier: Apache-2.0
#include "ranknet/netbuild.hpp"

#include <algorithm>
#include <numeric>

#include "ranknet/error.hpp"

namespace ranknet {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) throw DimensionError("smallest prime factor needs n >= 2");
  if (n % 2 == 0) return 2;
  for (std::uint64_t p = 3; p <= n / p; p += 2) {
    if (n % p == 0) return p;
  }
  return n;
}

std::vector<std::uint64_t> ascending_factorization(std::uint64_t n) {
  if (n < 2) throw DimensionError("factorization needs n >= 2");
  std::vector<std::uint64_t> factors;
  while (n > 1) {
    const auto p = smallest_prime_factor(n);
    factors.push_back(p);
    n /= p;
  }
  return factors;
}

bool is_prime(std::uint64_t n) { return n >= 2 && smallest_prime_factor(n) == n; }

std::vector<std::size_t> index_vector_v(std::size_t j, std::size_t k, std::size_t d, std::size_t D) {
  if (D == 0 || j >= D || k >= D) throw IndexError("index vector v needs 0 <= j, k < D");
  std::vector<std::size_t> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = (j + k * i) % D + D * i;
  return v;
}

std::vector<std::size_t> index_vector_w(std::size_t j, std::size_t D) {
  std::vector<std::size_t> w(D);
  std::iota(w.begin(), w.end(), j * D);
  return w;
}

std::string_view to_string(Builder b) {
  switch (b) {
    case Builder::Binary: return "binary";
    case Builder::Divisor: return "divisor";
    case Builder::Prime: return "prime";
  }
  return "unknown";
}

Builder builder_from_string(std::string_view name) {
  if (name == "binary") return Builder::Binary;
  if (name == "divisor") return Builder::Divisor;
  if (name == "prime") return Builder::Prime;
  throw DomainError("unknown builder '" + std::string(name) + "'");
}

std::size_t Network::comparator_count() const {
  std::size_t total = 0;
  for (const auto& level : levels) total += level.comparators.size();
  return total;
}

namespace {

void require_size(std::size_t n) {
  if (n < 2) throw DimensionError("networks need n >= 2, got " + std::to_string(n));
}

Level whole_range_level(std::size_t n) {
  Comparator c;
  c.indices.resize(n);
  std::iota(c.indices.begin(), c.indices.end(), std::size_t{0});
  return Level{{std::move(c)}};
}

// The D levels of d-ary comparators that join the d contiguous blocks.
void append_cross_levels(std::vector<Level>& levels, std::size_t d, std::size_t D) {
  for (std::size_t k = 0; k < D; ++k) {
    Level level;
    level.comparators.reserve(D);
    for (std::size_t j = 0; j < D; ++j) level.comparators.push_back({index_vector_v(j, k, d, D)});
    levels.push_back(std::move(level));
  }
}

std::vector<Level> prime_levels(std::size_t n) {
  const auto d = static_cast<std::size_t>(smallest_prime_factor(n));
  if (d == n) return {whole_range_level(n)};
  const std::size_t D = n / d;
  std::vector<Level> levels;
  // Every block runs the same sub-network, so level t of all d copies merges
  // into one full-width level.
  for (const auto& sub : prime_levels(D)) {
    Level merged;
    merged.comparators.reserve(sub.comparators.size() * d);
    for (std::size_t block = 0; block < d; ++block) {
      for (const auto& c : sub.comparators) {
        Comparator shifted = c;
        for (auto& idx : shifted.indices) idx += block * D;
        merged.comparators.push_back(std::move(shifted));
      }
    }
    levels.push_back(std::move(merged));
  }
  append_cross_levels(levels, d, D);
  return levels;
}

}  // namespace

Network binary_network(std::size_t n) {
  require_size(n);
  // Circle method over an even number of slots; slot n is a bye for odd n.
  const std::size_t slots = n + (n % 2);
  const std::size_t rounds = slots - 1;
  Network net{n, Builder::Binary, {}};
  for (std::size_t r = 0; r < rounds; ++r) {
    Level level;
    auto add = [&](std::size_t a, std::size_t b) {
      if (a >= n || b >= n) return;
      level.comparators.push_back({{std::min(a, b), std::max(a, b)}});
    };
    add(slots - 1, r);
    for (std::size_t i = 1; i < slots / 2; ++i) add((r + i) % rounds, (r + rounds - i) % rounds);
    std::sort(level.comparators.begin(), level.comparators.end(),
              [](const Comparator& a, const Comparator& b) { return a.indices < b.indices; });
    net.levels.push_back(std::move(level));
  }
  return net;
}

Network divisor_network(std::size_t n) {
  require_size(n);
  Network net{n, Builder::Divisor, {}};
  const auto d = static_cast<std::size_t>(smallest_prime_factor(n));
  if (d == n) {
    net.levels.push_back(whole_range_level(n));
    return net;
  }
  const std::size_t D = n / d;
  Level blocks;
  for (std::size_t j = 0; j < d; ++j) blocks.comparators.push_back({index_vector_w(j, D)});
  net.levels.push_back(std::move(blocks));
  append_cross_levels(net.levels, d, D);
  return net;
}

Network prime_network(std::size_t n) {
  require_size(n);
  return Network{n, Builder::Prime, prime_levels(n)};
}

Network build_network(Builder b, std::size_t n) {
  switch (b) {
    case Builder::Binary: return binary_network(n);
    case Builder::Divisor: return divisor_network(n);
    case Builder::Prime: return prime_network(n);
  }
  throw DomainError("unknown builder");
}

ValidationReport validate_network(const Network& net) {
  constexpr std::size_t kMaxMessages = 16;
  ValidationReport report;
  std::size_t suppressed = 0;
  auto fail = [&](const std::string& msg) {
    if (report.violations.size() < kMaxMessages) {
      report.violations.push_back(msg);
    } else {
      ++suppressed;
    }
  };

  const std::size_t n = net.n;
  if (n < 2) {
    fail("network size must be >= 2");
    return report;
  }

  const bool odd_binary = net.builder == Builder::Binary && n % 2 == 1;
  std::vector<std::uint8_t> pair_count(n * (n - 1) / 2, 0);
  std::vector<std::size_t> owner(n);

  for (std::size_t li = 0; li < net.levels.size(); ++li) {
    const auto& level = net.levels[li];
    std::fill(owner.begin(), owner.end(), SIZE_MAX);
    std::size_t covered = 0;
    for (std::size_t ci = 0; ci < level.comparators.size(); ++ci) {
      const auto& idx = level.comparators[ci].indices;
      auto where = [&] { return "level " + std::to_string(li) + " comparator " + std::to_string(ci); };
      if (idx.size() < 2) {
        fail(where() + ": arity must be >= 2");
        continue;
      }
      if (net.builder == Builder::Prime && !is_prime(idx.size())) {
        fail(where() + ": arity " + std::to_string(idx.size()) + " is not prime");
      }
      bool usable = true;
      for (std::size_t t = 0; t < idx.size(); ++t) {
        if (idx[t] >= n) {
          fail(where() + ": index " + std::to_string(idx[t]) + " out of range");
          usable = false;
        } else if (t > 0 && idx[t] <= idx[t - 1]) {
          fail(where() + ": indices not strictly increasing");
          usable = false;
        }
      }
      if (!usable) continue;
      for (std::size_t g : idx) {
        if (owner[g] != SIZE_MAX) {
          fail(where() + ": position " + std::to_string(g) + " already used in this level");
        } else {
          owner[g] = ci;
          ++covered;
        }
      }
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
          auto& count = pair_count[idx[b] * (idx[b] - 1) / 2 + idx[a]];
          if (count < 2) ++count;
        }
      }
      report.binary_equivalent += idx.size() * (idx.size() - 1) / 2;
    }
    const std::size_t expected = odd_binary ? n - 1 : n;
    if (covered != expected) {
      fail("level " + std::to_string(li) + " covers " + std::to_string(covered) + " of " +
           std::to_string(n) + " positions, expected " + std::to_string(expected));
    }
  }

  for (std::size_t b = 1; b < n; ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      const auto count = pair_count[b * (b - 1) / 2 + a];
      if (count == 1) {
        ++report.pairs_covered;
      } else {
        fail("pair (" + std::to_string(a) + ", " + std::to_string(b) + ") covered " +
             (count == 0 ? std::string("0 times") : std::string("more than once")));
      }
    }
  }
  if (suppressed > 0) report.violations.push_back("... " + std::to_string(suppressed) + " more");
  return report;
}

}  // namespace ranknet
