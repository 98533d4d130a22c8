// SPDX-License-Identifier: Apache-2.0
//
// Rank-summing comparator networks.
//
// A network is a list of levels; each level is a set of comparators with
// disjoint index sets. Running every comparator and adding each element's
// partial ranks across all levels gives its full rank, provided every
// unordered pair of positions meets in exactly one comparator.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ranknet {

/// Least prime dividing n. Throws DimensionError for n < 2.
std::uint64_t smallest_prime_factor(std::uint64_t n);

/// Prime factors of n in nondecreasing order, with multiplicity.
std::vector<std::uint64_t> ascending_factorization(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Element i is (j + k*i) mod D + D*i for i in [0, d).
std::vector<std::size_t> index_vector_v(std::size_t j, std::size_t k, std::size_t d, std::size_t D);

/// The contiguous block [jD, jD + D).
std::vector<std::size_t> index_vector_w(std::size_t j, std::size_t D);

struct Comparator {
  std::vector<std::size_t> indices;  // strictly increasing global positions

  std::size_t arity() const { return indices.size(); }
  friend bool operator==(const Comparator&, const Comparator&) = default;
};

struct Level {
  std::vector<Comparator> comparators;

  friend bool operator==(const Level&, const Level&) = default;
};

enum class Builder { Binary, Divisor, Prime };

std::string_view to_string(Builder b);
/// Throws DomainError for unknown names.
Builder builder_from_string(std::string_view name);

struct Network {
  std::size_t n = 0;
  Builder builder = Builder::Binary;
  std::vector<Level> levels;

  std::size_t comparator_count() const;
  friend bool operator==(const Network&, const Network&) = default;
};

/// One comparator per unordered pair, packed into round-robin levels. For odd
/// n every level leaves exactly one position idle.
Network binary_network(std::size_t n);

/// One level of d comparators of arity D = n/d over the contiguous blocks,
/// followed by D levels of D comparators of arity d, where d is the smallest
/// prime factor. A prime n gives a single n-ary comparator.
Network divisor_network(std::size_t n);

/// Recursively splits the block level of the divisor network until every
/// comparator has prime arity. Sub-networks of sibling blocks share levels.
Network prime_network(std::size_t n);

Network build_network(Builder b, std::size_t n);

struct ValidationReport {
  std::vector<std::string> violations;
  std::size_t pairs_covered = 0;
  std::uint64_t binary_equivalent = 0;  // sum of k(k-1)/2 over comparators

  bool ok() const { return violations.empty(); }
};

/// Checks index ranges and ordering, level partitioning, exact-once pair
/// coverage, and prime arity for prime networks. Never throws.
ValidationReport validate_network(const Network& net);

}  // namespace ranknet
