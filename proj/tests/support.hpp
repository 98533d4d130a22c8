// SPDX-License-Identifier: Apache-2.0
//
// Generators and brute-force oracles shared by the test binaries. Nothing here
// calls into the code paths it is used to check.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "ranknet/rankcore.hpp"

namespace ranknet::testing {

/// Random keys; with `duplicates` the values come from a range of about n/2
/// integers so ties are common.
inline KeyVector random_keys(std::mt19937_64& rng, std::size_t n, bool duplicates) {
  KeyVector x(n);
  if (duplicates) {
    std::uniform_int_distribution<int> dist(0, static_cast<int>(std::max<std::size_t>(1, n / 2)));
    for (auto& v : x) v = dist(rng);
  } else {
    std::uniform_real_distribution<double> dist(-1000.0, 1000.0);
    for (auto& v : x) v = dist(rng);
  }
  return x;
}

/// Rank straight from its definition: strictly smaller plus earlier equal.
inline RankVector brute_rank(const KeyVector& x) {
  RankVector r(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] < x[i] || (j < i && x[j] == x[i])) ++r[i];
    }
  }
  return r;
}

/// Calls f on every permutation of 0..n-1 as a key vector.
template <typename F>
void for_each_permutation(std::size_t n, F&& f) {
  KeyVector x(n);
  std::iota(x.begin(), x.end(), 0.0);
  do {
    f(x);
  } while (std::next_permutation(x.begin(), x.end()));
}

}  // namespace ranknet::testing
