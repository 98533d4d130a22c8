// SPDX-License-Identifier: Apache-2.0
//
// Text formats: network JSON and DOT, partial-rank and sequence CSV, key lists.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ranknet/analytics.hpp"
#include "ranknet/engine.hpp"
#include "ranknet/netbuild.hpp"
#include "ranknet/rankcore.hpp"

namespace ranknet {

/// {"n": N, "builder": "...", "levels": [[{"indices": [...]}, ...], ...]}
std::string network_to_json(const Network& net);

/// Throws FormatError on malformed JSON or schema mismatch. The result is not
/// validated; run validate_network before trusting it.
Network network_from_json(std::string_view text);

/// One cluster per level, one node per comparator labelled "C_k", edges from
/// the input positions into each comparator and from each comparator into a
/// shared adder node.
std::string network_to_dot(const Network& net);

/// Rows are positions: i, x_i, one column per level, then pi.
std::string partial_rank_table_to_csv(const PartialRankTable& table, std::span<const Key> x);

enum class SequenceKind { Levels, Comparators, Adds };

/// Throws FormatError for unknown names.
SequenceKind sequence_kind_from_string(std::string_view name);

/// "N,<kind>" rows. Comparators start at N = 1, the others at N = 2.
void write_sequence_csv(std::ostream& os, SequenceKind kind, std::uint64_t max_n);

/// N, levels_total, comps_total, addition_complexity for N = 2..max_n, plus
/// L_p and C_p columns for every prime p <= max_n when per_prime is set.
void write_profile_csv(std::ostream& os, std::uint64_t max_n, bool per_prime);

std::string profile_to_json(const ComplexityProfile& profile);

/// Comma, whitespace or newline separated decimal numbers. Throws FormatError
/// on anything unparsable and InvalidKey on NaN or infinity.
KeyVector parse_keys(std::string_view text);

/// Shortest decimal form that round-trips.
std::string format_key(Key k);

}  // namespace ranknet
