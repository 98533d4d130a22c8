// SPDX-License-Identifier: Apache-2.0
//
// Rank comparators and the pairwise comparison matrix.
//
// A comparator here never reorders its inputs; it emits the stable rank of
// each input. Ties are broken by position: an element's rank counts the
// strictly smaller elements plus the equal elements that precede it.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ranknet {

using Key = double;
using KeyVector = std::vector<Key>;

/// Permutation indices: ranks[i] is the sorted position of element i.
using RankVector = std::vector<std::size_t>;

/// Throws InvalidKey on the first NaN or infinity, DimensionError if empty.
void check_keys(std::span<const Key> x);

/// True iff `ranks` is a permutation of 0..size-1.
bool is_permutation(std::span<const std::size_t> ranks);

/// Stable rank of every element (the k-ary comparator).
RankVector stable_rank(std::span<const Key> x);

/// N x N boolean matrix with zero diagonal and complemented transpose.
///
/// Entry (i, j) for j > i holds (x_i > x_j); entry (j, i) is its complement,
/// so row sums are the stable ranks.
class ComparisonMatrix {
 public:
  /// Builds from row-major bits; throws DimensionError if the shape is wrong
  /// and DomainError if the diagonal or skew symmetry is violated.
  ComparisonMatrix(std::size_t n, std::vector<std::uint8_t> bits);

  /// The matrix whose strict upper triangle is `upper(i, j)`.
  template <typename F>
  static ComparisonMatrix from_upper(std::size_t n, F&& upper) {
    std::vector<std::uint8_t> bits(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool b = upper(i, j);
        bits[i * n + j] = b ? 1 : 0;
        bits[j * n + i] = b ? 0 : 1;
      }
    }
    return ComparisonMatrix(n, std::move(bits), Unchecked{});
  }

  std::size_t size() const { return n_; }
  bool at(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  std::span<const std::uint8_t> bits() const& { return bits_; }
  std::span<const std::uint8_t> bits() && = delete;

  friend bool operator==(const ComparisonMatrix&, const ComparisonMatrix&) = default;

 private:
  struct Unchecked {};
  ComparisonMatrix(std::size_t n, std::vector<std::uint8_t> bits, Unchecked)
      : n_(n), bits_(std::move(bits)) {}

  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

ComparisonMatrix comparison_matrix(std::span<const Key> x);

/// Row sums. Only a permutation when the matrix is realizable.
RankVector row_sum_ranks(const ComparisonMatrix& c);

/// True iff some key vector produces `c`, i.e. the tournament is transitive.
bool is_realizable(const ComparisonMatrix& c);

/// Strict upper triangle in column-major order: (0,1), (0,2), (1,2), (0,3), ...
std::vector<std::uint8_t> half_vectorize(const ComparisonMatrix& c);

/// Column index of pair (i, j), i < j, in the half-vector ordering.
inline std::size_t half_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

/// Integer N x N(N-1)/2 matrix mapping the half-vector of a comparison matrix
/// to its row sums minus the identity ranks. Column (i, j) has +1 in row i and
/// -1 in row j.
class DeltaMatrix {
 public:
  /// Throws DimensionError for n < 2.
  explicit DeltaMatrix(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<std::int64_t> column_sums() const;

  /// Matrix rank by fraction-free elimination.
  std::size_t rank() const;

  /// Delta * c for a half-vector c.
  std::vector<std::int64_t> apply(std::span<const std::uint8_t> c) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int8_t> entries_;
};

inline DeltaMatrix delta_matrix(std::size_t n) { return DeltaMatrix(n); }

/// Checks C 1 == Delta c + [0..N-1] for the comparison matrix of x.
bool delta_identity_check(std::span<const Key> x);

/// Rank of an integer matrix (row-major) by Bareiss elimination.
std::size_t integer_rank(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols);

}  // namespace ranknet
