// SPDX-License-Identifier: Apache-2.0
#include "ranknet/engine.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "ranknet/error.hpp"

namespace ranknet {

namespace {

constexpr std::size_t kSmallArity = 32;

// Adds the stable rank of each comparator input, within the comparator, into
// acc at the comparator's global positions.
void run_comparator(const Comparator& c, std::span<const Key> x, std::span<std::size_t> acc) {
  const auto& g = c.indices;
  const std::size_t k = g.size();
  if (k <= kSmallArity) {
    std::array<Key, kSmallArity> v;
    for (std::size_t t = 0; t < k; ++t) v[t] = x[g[t]];
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t r = 0;
      for (std::size_t s = 0; s < t; ++s) r += v[s] <= v[t];
      for (std::size_t s = t + 1; s < k; ++s) r += v[s] < v[t];
      acc[g[t]] += r;
    }
    return;
  }
  KeyVector v(k);
  for (std::size_t t = 0; t < k; ++t) v[t] = x[g[t]];
  const auto local = stable_rank(v);
  for (std::size_t t = 0; t < k; ++t) acc[g[t]] += local[t];
}

void run_levels(const Network& net, std::size_t first, std::size_t last, std::span<const Key> x,
                std::span<std::size_t> acc) {
  for (std::size_t li = first; li < last; ++li) {
    for (const auto& c : net.levels[li].comparators) run_comparator(c, x, acc);
  }
}

std::string level_label(const Network& net, const Level& level) {
  std::set<std::size_t> arities;
  for (const auto& c : level.comparators) arities.insert(c.arity());
  std::ostringstream os;
  os << "L_{" << net.n << ",";
  bool first = true;
  for (auto a : arities) {
    os << (first ? "" : "/") << a;
    first = false;
  }
  os << "}";
  return os.str();
}

void check_input(const Network& net, std::span<const Key> x) {
  if (x.size() != net.n) {
    throw DimensionError("input length " + std::to_string(x.size()) + " does not match network size " +
                         std::to_string(net.n));
  }
  check_keys(x);
}

void require_valid(const Network& net) {
  const auto report = validate_network(net);
  if (!report.ok()) throw ValidationError("invalid network: " + report.violations.front());
}

}  // namespace

Executor::Executor(const Network& net, ExecOptions opts) : net_(net), opts_(opts) {
  require_valid(net_);
  if (opts_.workers == 0) opts_.workers = std::max(1u, std::thread::hardware_concurrency());
}

RankVector Executor::run(std::span<const Key> x) const {
  check_input(net_, x);
  const std::size_t levels = net_.levels.size();
  const std::size_t workers = std::min(opts_.workers, levels);
  RankVector acc(net_.n, 0);
  if (workers <= 1 || net_.n < opts_.sequential_below) {
    run_levels(net_, 0, levels, x, acc);
    return acc;
  }

  std::vector<RankVector> partial(workers, RankVector(net_.n, 0));
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = levels * w / workers;
      const std::size_t last = levels * (w + 1) / workers;
      pool.emplace_back([&, w, first, last] { run_levels(net_, first, last, x, partial[w]); });
    }
  }
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += p[i];
  }
  return acc;
}

RankVector execute(const Network& net, std::span<const Key> x, ExecOptions opts) {
  return Executor(net, opts).run(x);
}

RankVector PartialRankTable::total() const {
  RankVector sum(n, 0);
  for (const auto& col : columns) {
    for (std::size_t i = 0; i < n; ++i) sum[i] += col.ranks[i];
  }
  return sum;
}

PartialRankTable partial_rank_table(const Network& net, std::span<const Key> x) {
  require_valid(net);
  check_input(net, x);
  PartialRankTable table{net.n, {}};
  table.columns.reserve(net.levels.size());
  for (const auto& level : net.levels) {
    PartialRankColumn col{level_label(net, level), RankVector(net.n, 0)};
    for (const auto& c : level.comparators) run_comparator(c, x, col.ranks);
    table.columns.push_back(std::move(col));
  }
  return table;
}

KeyVector apply_permutation(std::span<const Key> x, std::span<const std::size_t> pi) {
  if (pi.size() != x.size()) throw PermutationError("permutation length does not match input");
  if (!is_permutation(pi)) throw PermutationError("rank vector is not a permutation");
  KeyVector s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[pi[i]] = x[i];
  return s;
}

RankVector invert_permutation(std::span<const std::size_t> pi) {
  if (!is_permutation(pi)) throw PermutationError("rank vector is not a permutation");
  RankVector order(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) order[pi[i]] = i;
  return order;
}

ComparisonMatrix assemble_tiles(const Network& net, std::span<const Key> x) {
  require_valid(net);
  check_input(net, x);
  const std::size_t n = net.n;
  std::vector<std::uint8_t> bits(n * n, 0);
  for (const auto& level : net.levels) {
    for (const auto& c : level.comparators) {
      KeyVector local(c.arity());
      for (std::size_t t = 0; t < c.arity(); ++t) local[t] = x[c.indices[t]];
      const auto tile = comparison_matrix(local);
      for (std::size_t a = 0; a < c.arity(); ++a) {
        for (std::size_t b = 0; b < c.arity(); ++b) {
          if (tile.at(a, b)) bits[c.indices[a] * n + c.indices[b]] = 1;
        }
      }
    }
  }
  return ComparisonMatrix(n, std::move(bits));
}

}  // namespace ranknet
