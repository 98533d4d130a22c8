// SPDX-License-Identifier: Apache-2.0
#include "ranknet/rankcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "ranknet/error.hpp"

namespace ranknet {

void check_keys(std::span<const Key> x) {
  if (x.empty()) throw DimensionError("key vector is empty");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) {
      throw InvalidKey("key at position " + std::to_string(i) + " is not finite");
    }
  }
}

bool is_permutation(std::span<const std::size_t> ranks) {
  std::vector<bool> seen(ranks.size(), false);
  for (std::size_t r : ranks) {
    if (r >= ranks.size() || seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

RankVector stable_rank(std::span<const Key> x) {
  check_keys(x);
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  RankVector ranks(x.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) ranks[order[pos]] = pos;
  return ranks;
}

ComparisonMatrix::ComparisonMatrix(std::size_t n, std::vector<std::uint8_t> bits)
    : n_(n), bits_(std::move(bits)) {
  if (n_ == 0 || bits_.size() != n_ * n_) {
    throw DimensionError("comparison matrix needs n*n bits with n >= 1");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (bits_[i * n_ + i] != 0) throw DomainError("comparison matrix diagonal must be 0");
    for (std::size_t j = 0; j < n_; ++j) {
      const auto b = bits_[i * n_ + j];
      if (b > 1) throw DomainError("comparison matrix entries must be 0 or 1");
      if (i != j && b == bits_[j * n_ + i]) {
        throw DomainError("comparison matrix is not 1-bit skew-symmetric at (" +
                          std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

ComparisonMatrix comparison_matrix(std::span<const Key> x) {
  check_keys(x);
  return ComparisonMatrix::from_upper(x.size(),
                                      [&](std::size_t i, std::size_t j) { return x[i] > x[j]; });
}

RankVector row_sum_ranks(const ComparisonMatrix& c) {
  const std::size_t n = c.size();
  RankVector ranks(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ranks[i] += c.at(i, j) ? 1 : 0;
  }
  return ranks;
}

// A tournament is transitive iff its score sequence is 0, 1, ..., n-1.
bool is_realizable(const ComparisonMatrix& c) { return is_permutation(row_sum_ranks(c)); }

std::vector<std::uint8_t> half_vectorize(const ComparisonMatrix& c) {
  const std::size_t n = c.size();
  std::vector<std::uint8_t> half;
  half.reserve(n * (n - 1) / 2);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) half.push_back(c.at(i, j) ? 1 : 0);
  }
  return half;
}

DeltaMatrix::DeltaMatrix(std::size_t n) : rows_(n), cols_(n * (n - 1) / 2) {
  if (n < 2) throw DimensionError("delta matrix needs n >= 2");
  entries_.assign(rows_ * cols_, 0);
  // Unrolled block recursion: growing from k-1 to k appends an identity block
  // over the first k-1 rows and a row of -1 beneath it.
  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t first = (k - 1) * (k - 2) / 2;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      entries_[i * cols_ + first + i] = 1;
      entries_[(k - 1) * cols_ + first + i] = -1;
    }
  }
}

std::vector<std::int64_t> DeltaMatrix::column_sums() const {
  std::vector<std::int64_t> sums(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) sums[c] += at(r, c);
  }
  return sums;
}

std::size_t DeltaMatrix::rank() const {
  return integer_rank(std::vector<std::int64_t>(entries_.begin(), entries_.end()), rows_, cols_);
}

std::vector<std::int64_t> DeltaMatrix::apply(std::span<const std::uint8_t> c) const {
  if (c.size() != cols_) throw DimensionError("half-vector length does not match delta matrix");
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) out[r] += at(r, k) * static_cast<std::int64_t>(c[k]);
  }
  return out;
}

bool delta_identity_check(std::span<const Key> x) {
  const auto c = comparison_matrix(x);
  const auto lhs = row_sum_ranks(c);
  if (x.size() == 1) return lhs[0] == 0;
  const auto rhs = DeltaMatrix(x.size()).apply(half_vectorize(c));
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (static_cast<std::int64_t>(lhs[i]) != rhs[i] + static_cast<std::int64_t>(i)) return false;
  }
  return true;
}

std::size_t integer_rank(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols) {
  if (a.size() != rows * cols) throw DimensionError("matrix buffer does not match its shape");
  std::size_t rank = 0;
  std::int64_t prev = 1;
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * cols + c]; };
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        // Bareiss step; the division is exact.
        at(r, c) = (at(rank, col) * at(r, c) - at(r, col) * at(rank, c)) / prev;
      }
      at(r, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace ranknet
