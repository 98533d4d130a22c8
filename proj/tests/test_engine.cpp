// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <thread>

#include "ranknet/analytics.hpp"
#include "ranknet/engine.hpp"
#include "ranknet/error.hpp"
#include "support.hpp"

using namespace ranknet;

namespace {

constexpr Builder kAll[] = {Builder::Binary, Builder::Divisor, Builder::Prime};

const KeyVector kTableInput{5, 12, 2, 3, 5, 7, 8, 6};

}  // namespace

TEST_CASE("divisor network of 8 on the worked example") {
  const auto net = divisor_network(8);
  CHECK(execute(net, kTableInput) == RankVector{2, 7, 0, 1, 3, 5, 6, 4});

  const auto table = partial_rank_table(net, kTableInput);
  REQUIRE(table.columns.size() == 5);
  CHECK(table.columns[0].label == "L_{8,4}");
  CHECK(table.columns[1].label == "L_{8,2}");
  // Per-comparator stable ranks, evaluated by hand from the v vectors.
  CHECK(table.columns[0].ranks == RankVector{2, 3, 0, 1, 0, 2, 3, 1});
  CHECK(table.columns[1].ranks == RankVector{0, 1, 0, 0, 1, 0, 1, 1});
  CHECK(table.columns[2].ranks == RankVector{0, 1, 0, 0, 1, 1, 0, 1});
  CHECK(table.columns[3].ranks == RankVector{0, 1, 0, 0, 1, 1, 1, 0});
  CHECK(table.columns[4].ranks == RankVector{0, 1, 0, 0, 0, 1, 1, 1});
  CHECK(table.total() == RankVector{2, 7, 0, 1, 3, 5, 6, 4});
}

TEST_CASE("single comparator network reduces to stable_rank") {
  const auto net = divisor_network(3);
  CHECK(execute(net, KeyVector{6.4, -9.3, 0.1}) == RankVector{2, 0, 1});
  const auto table = partial_rank_table(prime_network(7), KeyVector{3, 1, 4, 1, 5, 9, 2});
  REQUIRE(table.columns.size() == 1);
  CHECK(table.columns[0].ranks == stable_rank(KeyVector{3, 1, 4, 1, 5, 9, 2}));
}

TEST_CASE("prime network of 6 on random inputs") {
  std::mt19937_64 rng(6);
  const auto net = prime_network(6);
  const Executor exec(net);
  for (int s = 0; s < 500; ++s) {
    const auto x = testing::random_keys(rng, 6, s % 2 == 0);
    CHECK(exec.run(x) == testing::brute_rank(x));
  }
}

TEST_CASE("every builder ranks every permutation of small inputs") {
  for (auto b : kAll) {
    for (std::size_t n = 2; n <= 6; ++n) {
      const auto net = build_network(b, n);
      const Executor exec(net, {1, 64});
      testing::for_each_permutation(n, [&](const KeyVector& x) { CHECK(exec.run(x) == testing::brute_rank(x)); });
    }
  }
}

TEST_CASE("every builder matches the oracle with ties, up to 300") {
  std::mt19937_64 rng(300);
  for (auto b : kAll) {
    for (std::size_t n : {2, 9, 30, 64, 65, 97, 128, 210, 243, 300}) {
      const auto net = build_network(b, n);
      const Executor exec(net);
      for (int s = 0; s < 10; ++s) {
        const auto x = testing::random_keys(rng, n, s % 2 == 0);
        const auto pi = exec.run(x);
        CHECK(pi == stable_rank(x));
        const auto sorted = apply_permutation(x, pi);
        CHECK(std::is_sorted(sorted.begin(), sorted.end()));
      }
    }
  }
}

TEST_CASE("all-equal input yields the identity") {
  for (auto b : kAll) {
    const auto net = build_network(b, 12);
    const KeyVector x(12, 3.5);
    RankVector identity(12);
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    CHECK(execute(net, x) == identity);
    for (const auto& col : partial_rank_table(net, x).columns) CHECK(col.ranks.size() == 12);
    CHECK(partial_rank_table(net, x).total() == identity);
  }
}

TEST_CASE("worker count does not change results") {
  std::mt19937_64 rng(1024);
  for (auto b : kAll) {
    const auto net = build_network(b, 360);
    const Executor one(net, {1, 0});
    const Executor two(net, {2, 0});
    const Executor many(net, {7, 0});
    for (int s = 0; s < 5; ++s) {
      const auto x = testing::random_keys(rng, 360, s % 2 == 0);
      const auto ref = one.run(x);
      CHECK(two.run(x) == ref);
      CHECK(many.run(x) == ref);
    }
  }
}

TEST_CASE("one executor shared by several threads") {
  const auto net = prime_network(210);
  const Executor exec(net, {2, 0});
  std::vector<int> failures(4, 0);
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < failures.size(); ++t) {
      threads.emplace_back([&, t] {
        std::mt19937_64 rng(t);
        for (int s = 0; s < 20; ++s) {
          const auto x = testing::random_keys(rng, 210, s % 2 == 0);
          if (exec.run(x) != testing::brute_rank(x)) ++failures[t];
        }
      });
    }
  }
  for (int f : failures) CHECK(f == 0);
}

TEST_CASE("partial rank columns match the level count") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 64; ++n) {
    const auto x = testing::random_keys(rng, n, true);
    const auto table = partial_rank_table(prime_network(n), x);
    CHECK(table.columns.size() == partial_rank_count(n));
    CHECK(is_permutation(table.total()));
  }
}

TEST_CASE("execution errors") {
  const auto net = prime_network(4);
  CHECK_THROWS_AS(execute(net, KeyVector{1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(execute(net, KeyVector{1, 2, 3, std::numeric_limits<double>::quiet_NaN()}), InvalidKey);
  auto broken = net;
  broken.levels.pop_back();
  CHECK_THROWS_AS(Executor{broken}, ValidationError);
  CHECK_THROWS_AS(partial_rank_table(broken, KeyVector{1, 2, 3, 4}), ValidationError);
}

TEST_CASE("apply_permutation") {
  CHECK(apply_permutation(KeyVector{6.4, -9.3, 0.1}, RankVector{2, 0, 1}) == KeyVector{-9.3, 0.1, 6.4});
  CHECK(apply_permutation(kTableInput, RankVector{2, 7, 0, 1, 3, 5, 6, 4}) == KeyVector{2, 3, 5, 5, 6, 7, 8, 12});
  CHECK(apply_permutation(kTableInput, RankVector{0, 1, 2, 3, 4, 5, 6, 7}) == kTableInput);
  CHECK_THROWS_AS(apply_permutation(KeyVector{1, 2}, RankVector{0, 0}), PermutationError);
  CHECK_THROWS_AS(apply_permutation(KeyVector{1, 2}, RankVector{0, 1, 2}), PermutationError);
  CHECK(invert_permutation(RankVector{2, 0, 1}) == RankVector{1, 2, 0});
  CHECK_THROWS_AS(invert_permutation(RankVector{1, 1}), PermutationError);
}

TEST_CASE("comparator tiles reassemble the comparison matrix") {
  std::mt19937_64 rng(11);
  for (auto b : kAll) {
    for (std::size_t n = 2; n <= 48; ++n) {
      const auto net = build_network(b, n);
      const auto x = testing::random_keys(rng, n, n % 2 == 0);
      CHECK(assemble_tiles(net, x) == comparison_matrix(x));
    }
  }
}

TEST_CASE("literal Kronecker tile placement disagrees with the scatter positions") {
  // Place C_d(x(v_{j,k})) entry (a, b) at (a*D + k, b*D + j) instead of at
  // (v_a, v_b); the block tiles stay on the diagonal either way.
  const std::size_t d = 2;
  const std::size_t D = 3;
  const std::size_t n = d * D;
  std::mt19937_64 rng(2024);
  int literal_mismatches = 0;
  for (int s = 0; s < 50; ++s) {
    const auto x = testing::random_keys(rng, n, false);
    std::vector<std::uint8_t> bits(n * n, 0);
    for (std::size_t j = 0; j < d; ++j) {
      const auto w = index_vector_w(j, D);
      const auto tile = comparison_matrix(KeyVector{x[w[0]], x[w[1]], x[w[2]]});
      for (std::size_t a = 0; a < D; ++a) {
        for (std::size_t b = 0; b < D; ++b) bits[(j * D + a) * n + j * D + b] = tile.at(a, b);
      }
    }
    for (std::size_t k = 0; k < D; ++k) {
      for (std::size_t j = 0; j < D; ++j) {
        const auto v = index_vector_v(j, k, d, D);
        const auto tile = comparison_matrix(KeyVector{x[v[0]], x[v[1]]});
        for (std::size_t a = 0; a < d; ++a) {
          for (std::size_t b = 0; b < d; ++b) {
            if (a != b) bits[(a * D + k) * n + b * D + j] = tile.at(a, b);
          }
        }
      }
    }
    // Compared as raw bits: the literal placement is not even skew-symmetric.
    const auto expected = comparison_matrix(x);
    if (!std::equal(bits.begin(), bits.end(), expected.bits().begin())) ++literal_mismatches;
    CHECK(assemble_tiles(divisor_network(n), x) == comparison_matrix(x));
  }
  CHECK(literal_mismatches > 0);
}
