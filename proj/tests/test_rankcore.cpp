// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>
#include <set>

#include "ranknet/error.hpp"
#include "ranknet/rankcore.hpp"
#include "support.hpp"

using namespace ranknet;

namespace {

ComparisonMatrix from_rows(std::vector<std::vector<int>> rows) {
  std::vector<std::uint8_t> bits;
  for (const auto& r : rows) bits.insert(bits.end(), r.begin(), r.end());
  return ComparisonMatrix(rows.size(), std::move(bits));
}

const std::vector<std::vector<int>> kS4 = {{0, 0, 0, 1}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 0}};

}  // namespace

TEST_CASE("stable_rank examples") {
  CHECK(stable_rank(KeyVector{6.4, -9.3, 0.1}) == RankVector{2, 0, 1});
  CHECK(stable_rank(KeyVector{-40.56, 10.76}) == RankVector{0, 1});
  CHECK(stable_rank(KeyVector{5, 5}) == RankVector{0, 1});
  CHECK(stable_rank(KeyVector{0, 1, 2}) == RankVector{0, 1, 2});
}

TEST_CASE("non-finite and empty keys are rejected") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(stable_rank(KeyVector{1.0, nan}), InvalidKey);
  CHECK_THROWS_AS(stable_rank(KeyVector{-inf}), InvalidKey);
  CHECK_THROWS_AS(comparison_matrix(KeyVector{inf, 0.0}), InvalidKey);
  CHECK_THROWS_AS(stable_rank(KeyVector{}), DimensionError);
}

TEST_CASE("comparison_matrix examples") {
  CHECK(comparison_matrix(KeyVector{6.4, -9.3, 0.1}) == from_rows({{0, 1, 1}, {0, 0, 0}, {0, 1, 0}}));
  CHECK(comparison_matrix(KeyVector{-40.56, 10.76}) == from_rows({{0, 0}, {1, 0}}));
  CHECK(comparison_matrix(KeyVector{5, 5}) == from_rows({{0, 0}, {1, 0}}));
}

TEST_CASE("ComparisonMatrix rejects malformed bits") {
  CHECK_THROWS_AS(ComparisonMatrix(2, {0, 1, 1, 0}), DomainError);  // both (0,1) and (1,0) set
  CHECK_THROWS_AS(ComparisonMatrix(2, {1, 0, 1, 0}), DomainError);  // diagonal
  CHECK_THROWS_AS(ComparisonMatrix(2, {0, 1, 0}), DimensionError);
  CHECK_NOTHROW(from_rows(kS4));
}

TEST_CASE("row_sum_ranks examples") {
  CHECK(row_sum_ranks(from_rows({{0, 1, 1}, {0, 0, 0}, {0, 1, 0}})) == RankVector{2, 0, 1});
  CHECK(row_sum_ranks(from_rows({{0, 0}, {1, 0}})) == RankVector{0, 1});
  CHECK(row_sum_ranks(from_rows(kS4)) == RankVector{1, 2, 2, 1});
}

TEST_CASE("is_realizable examples") {
  CHECK_FALSE(is_realizable(from_rows(kS4)));
  CHECK(is_realizable(comparison_matrix(KeyVector{6.4, -9.3, 0.1})));
  CHECK(is_realizable(ComparisonMatrix::from_upper(6, [](std::size_t, std::size_t) { return false; })));
}

TEST_CASE("realizable 4x4 matrices are exactly those reached by some key order") {
  std::set<std::vector<std::uint8_t>> reachable;
  testing::for_each_permutation(4, [&](const KeyVector& x) {
    const auto c = comparison_matrix(x);
    reachable.insert({c.bits().begin(), c.bits().end()});
  });
  // Ties add nothing new: a tie compares like the index-ordered pair.
  CHECK(reachable.size() == 24);

  const std::size_t pairs = 6;
  std::size_t accepted = 0;
  for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
    const auto c = ComparisonMatrix::from_upper(
        4, [&](std::size_t i, std::size_t j) { return (mask >> half_index(i, j)) & 1u; });
    const bool realizable = is_realizable(c);
    accepted += realizable;
    CHECK(realizable == (reachable.count({c.bits().begin(), c.bits().end()}) == 1));
    CHECK(realizable == is_permutation(row_sum_ranks(c)));
  }
  CHECK(accepted == 24);
}

TEST_CASE("delta_matrix small cases") {
  const auto d2 = delta_matrix(2);
  CHECK(d2.rows() == 2);
  CHECK(d2.cols() == 1);
  CHECK(d2.at(0, 0) == 1);
  CHECK(d2.at(1, 0) == -1);

  const auto d3 = delta_matrix(3);
  const int expected[3][3] = {{1, 1, 0}, {-1, 0, 1}, {0, -1, -1}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(d3.at(r, c) == expected[r][c]);
  }

  const auto d4 = delta_matrix(4);
  CHECK(d4.rows() == 4);
  CHECK(d4.cols() == 6);
  CHECK(d4.rank() == 3);
  for (auto s : d4.column_sums()) CHECK(s == 0);

  CHECK_THROWS_AS(delta_matrix(1), DimensionError);
  CHECK_THROWS_AS(delta_matrix(0), DimensionError);
}

TEST_CASE("delta_matrix keeps its block structure as N grows") {
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto big = delta_matrix(n);
    const auto small = delta_matrix(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < big.cols(); ++c) {
        int want;
        if (c < small.cols()) {
          want = r < n - 1 ? small.at(r, c) : 0;
        } else {
          const std::size_t i = c - small.cols();
          want = r == i ? 1 : (r == n - 1 ? -1 : 0);
        }
        CHECK(big.at(r, c) == want);
      }
    }
  }
}

TEST_CASE("integer_rank") {
  CHECK(integer_rank({1, 2, 3, 2, 4, 6, 1, 0, 1}, 3, 3) == 2);
  CHECK(integer_rank({0, 0, 0, 0}, 2, 2) == 0);
  CHECK(integer_rank({2, 1, 1, 3, 2, 1, 2, 1, 3}, 3, 3) == 3);
  CHECK(integer_rank({0, 1, 0, 0, 0, 1}, 2, 3) == 2);
}

TEST_CASE("half_vectorize ordering") {
  CHECK(half_vectorize(from_rows({{0, 1, 1}, {0, 0, 0}, {0, 1, 0}})) == std::vector<std::uint8_t>{1, 1, 0});
  CHECK(half_vectorize(from_rows({{0, 1}, {0, 0}})) == std::vector<std::uint8_t>{1});
  CHECK(half_vectorize(ComparisonMatrix::from_upper(4, [](std::size_t, std::size_t) { return false; })) ==
        std::vector<std::uint8_t>(6, 0));
  // Column-major: entry k of the half-vector is pair half_index(i, j).
  const auto c = ComparisonMatrix::from_upper(7, [](std::size_t i, std::size_t j) { return (i * 3 + j) % 2; });
  const auto h = half_vectorize(c);
  for (std::size_t j = 1; j < 7; ++j) {
    for (std::size_t i = 0; i < j; ++i) CHECK(h[half_index(i, j)] == (c.at(i, j) ? 1 : 0));
  }
}

TEST_CASE("delta identity on the three-element example") {
  const KeyVector x{6.4, -9.3, 0.1};
  const auto applied = delta_matrix(3).apply(std::vector<std::uint8_t>{1, 1, 0});
  CHECK(applied == std::vector<std::int64_t>{2, -1, -1});  // + [0,1,2] = [2,0,1]
  CHECK(delta_identity_check(x));
  CHECK(delta_identity_check(KeyVector{3, 1}));
  CHECK(delta_identity_check(KeyVector{1, 3}));
  CHECK(delta_identity_check(KeyVector{2, 2}));
}

TEST_CASE("property: ranks agree across routes and form a stable sort") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const auto x = testing::random_keys(rng, n, trial % 2 == 0);
    const auto ranks = stable_rank(x);
    CHECK(ranks == testing::brute_rank(x));
    CHECK(row_sum_ranks(comparison_matrix(x)) == ranks);
    CHECK(is_permutation(ranks));
    CHECK(std::accumulate(ranks.begin(), ranks.end(), std::size_t{0}) == n * (n - 1) / 2);
    CHECK(is_realizable(comparison_matrix(x)));

    // Scatter into sorted order; ties must keep their original order.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[ranks[i]] = i;
    for (std::size_t p = 1; p < n; ++p) {
      CHECK(x[order[p - 1]] <= x[order[p]]);
      if (x[order[p - 1]] == x[order[p]]) CHECK(order[p - 1] < order[p]);
    }
  }
}

TEST_CASE("property: delta identity and delta invariants") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 31;
    CHECK(delta_identity_check(testing::random_keys(rng, n, trial % 3 == 0)));
  }
  for (std::size_t n = 2; n <= 24; ++n) {
    const auto d = delta_matrix(n);
    CHECK(d.rank() == n - 1);
    for (auto s : d.column_sums()) CHECK(s == 0);
  }
}
