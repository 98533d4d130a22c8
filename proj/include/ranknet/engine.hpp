// SPDX-License-Identifier: Apache-2.0
//
// Executing rank-summing networks.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ranknet/netbuild.hpp"
#include "ranknet/rankcore.hpp"

namespace ranknet {

struct ExecOptions {
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t workers = 0;
  /// Inputs shorter than this run on the calling thread.
  std::size_t sequential_below = 64;
};

/// A validated network ready to run on many inputs.
///
/// Holds a reference to the network, which must outlive the executor. run()
/// is const and may be called concurrently. Levels are split across workers
/// in contiguous chunks; each worker owns its accumulator and the partial sums
/// are added in a fixed order, so the result does not depend on the worker
/// count.
class Executor {
 public:
  /// Throws ValidationError if the network is malformed.
  explicit Executor(const Network& net, ExecOptions opts = {});

  /// Throws DimensionError on length mismatch, InvalidKey on non-finite keys.
  RankVector run(std::span<const Key> x) const;

  const Network& network() const { return net_; }

 private:
  const Network& net_;
  ExecOptions opts_;
};

RankVector execute(const Network& net, std::span<const Key> x, ExecOptions opts = {});

struct PartialRankColumn {
  std::string label;  // e.g. "L_{8,4}": level over n positions with arity 4
  RankVector ranks;
};

/// One column of partial ranks per level.
struct PartialRankTable {
  std::size_t n = 0;
  std::vector<PartialRankColumn> columns;

  /// Elementwise sum of all columns.
  RankVector total() const;
};

PartialRankTable partial_rank_table(const Network& net, std::span<const Key> x);

/// s[pi[i]] = x[i]. Throws PermutationError unless pi is a permutation of the
/// right length.
KeyVector apply_permutation(std::span<const Key> x, std::span<const std::size_t> pi);

/// order[pi[i]] = i, the gather indices of the sorted sequence.
RankVector invert_permutation(std::span<const std::size_t> pi);

/// Places each comparator's local comparison matrix at its global positions.
/// For a valid network this reproduces comparison_matrix(x).
ComparisonMatrix assemble_tiles(const Network& net, std::span<const Key> x);

}  // namespace ranknet
