// SPDX-License-Identifier: Apache-2.0
#include "ranknet/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ranknet/error.hpp"

namespace ranknet {

using ordered_json = nlohmann::ordered_json;

std::string network_to_json(const Network& net) {
  ordered_json levels = ordered_json::array();
  for (const auto& level : net.levels) {
    ordered_json comps = ordered_json::array();
    for (const auto& c : level.comparators) comps.push_back(ordered_json{{"indices", c.indices}});
    levels.push_back(std::move(comps));
  }
  ordered_json doc;
  doc["n"] = net.n;
  doc["builder"] = std::string(to_string(net.builder));
  doc["levels"] = std::move(levels);
  return doc.dump();
}

namespace {

std::size_t unsigned_field(const nlohmann::json& v, const char* what) {
  if (!v.is_number_unsigned()) {
    throw FormatError(std::string("bad network JSON: ") + what + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

Network network_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    Network net;
    net.n = unsigned_field(doc.at("n"), "n");
    net.builder = builder_from_string(doc.at("builder").get<std::string>());
    for (const auto& level : doc.at("levels")) {
      if (!level.is_array()) throw FormatError("bad network JSON: each level must be an array");
      Level l;
      for (const auto& comp : level) {
        Comparator c;
        for (const auto& idx : comp.at("indices")) c.indices.push_back(unsigned_field(idx, "indices"));
        l.comparators.push_back(std::move(c));
      }
      net.levels.push_back(std::move(l));
    }
    return net;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad network JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw FormatError(std::string("bad network JSON: ") + e.what());
  }
}

std::string network_to_dot(const Network& net) {
  std::ostringstream os;
  os << "digraph ranknet {\n"
     << "  rankdir=LR;\n"
     << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < net.n; ++i) os << "  x" << i << " [label=\"x" << i << "\"];\n";
  os << "  sum [shape=box, label=\"+\"];\n";
  for (std::size_t li = 0; li < net.levels.size(); ++li) {
    os << "  subgraph cluster_L" << li << " {\n"
       << "    label=\"L" << li << "\";\n";
    const auto& comps = net.levels[li].comparators;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      os << "    c" << li << "_" << ci << " [shape=box, label=\"C_" << comps[ci].arity() << "\"];\n";
    }
    os << "  }\n";
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      for (auto g : comps[ci].indices) os << "  x" << g << " -> c" << li << "_" << ci << ";\n";
      os << "  c" << li << "_" << ci << " -> sum;\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string partial_rank_table_to_csv(const PartialRankTable& table, std::span<const Key> x) {
  if (x.size() != table.n) throw DimensionError("key vector does not match the table");
  std::ostringstream os;
  os << "i,x_i";
  for (const auto& col : table.columns) os << ",\"" << col.label << "\"";
  os << ",pi\n";
  const auto pi = table.total();
  for (std::size_t i = 0; i < table.n; ++i) {
    os << i << "," << format_key(x[i]);
    for (const auto& col : table.columns) os << "," << col.ranks[i];
    os << "," << pi[i] << "\n";
  }
  return os.str();
}

SequenceKind sequence_kind_from_string(std::string_view name) {
  if (name == "levels") return SequenceKind::Levels;
  if (name == "comparators") return SequenceKind::Comparators;
  if (name == "adds") return SequenceKind::Adds;
  throw FormatError("unknown sequence kind '" + std::string(name) + "'");
}

void write_sequence_csv(std::ostream& os, SequenceKind kind, std::uint64_t max_n) {
  switch (kind) {
    case SequenceKind::Levels:
      os << "N,levels\n";
      for (std::uint64_t n = 2; n <= max_n; ++n) os << n << "," << partial_rank_count(n) << "\n";
      break;
    case SequenceKind::Comparators:
      os << "N,comparators\n";
      for (std::uint64_t n = 1; n <= max_n; ++n) os << n << "," << total_comparators(n) << "\n";
      break;
    case SequenceKind::Adds:
      os << "N,adds\n";
      for (std::uint64_t n = 2; n <= max_n; ++n) os << n << "," << addition_complexity(n) << "\n";
      break;
  }
}

void write_profile_csv(std::ostream& os, std::uint64_t max_n, bool per_prime) {
  std::vector<std::uint64_t> primes;
  if (per_prime) {
    for (std::uint64_t p = 2; p <= max_n; ++p) {
      if (is_prime(p)) primes.push_back(p);
    }
  }
  os << "N,levels_total,comps_total,addition_complexity";
  for (auto p : primes) os << ",L_" << p;
  for (auto p : primes) os << ",C_" << p;
  os << "\n";
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    const auto prof = complexity_profile(n);
    os << n << "," << prof.partial_rank_count << "," << prof.total_comparators << ","
       << prof.addition_complexity;
    for (const auto* coeffs : {&prof.level_coeffs, &prof.comparator_coeffs}) {
      for (auto p : primes) {
        const auto it = coeffs->find(p);
        os << "," << (it == coeffs->end() ? 0 : it->second);
      }
    }
    os << "\n";
  }
}

std::string profile_to_json(const ComplexityProfile& profile) {
  auto coeffs = [](const PrimeCounts& counts) {
    ordered_json obj = ordered_json::object();
    for (const auto& [p, c] : counts) obj[std::to_string(p)] = c;
    return obj;
  };
  ordered_json doc;
  doc["n"] = profile.n;
  doc["level_coeffs"] = coeffs(profile.level_coeffs);
  doc["comparator_coeffs"] = coeffs(profile.comparator_coeffs);
  doc["partial_rank_count"] = profile.partial_rank_count;
  doc["addition_complexity"] = profile.addition_complexity;
  doc["total_comparators"] = profile.total_comparators;
  doc["binary_equivalent"] = profile.binary_equivalent;
  return doc.dump(2);
}

KeyVector parse_keys(std::string_view text) {
  KeyVector keys;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    auto token = text.substr(pos, end - pos);
    // from_chars rejects a leading '+'.
    if (token.size() > 1 && token.front() == '+') token.remove_prefix(1);
    Key value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw FormatError("cannot parse '" + std::string(text.substr(pos, end - pos)) + "' as a number");
    }
    if (!std::isfinite(value)) {
      throw InvalidKey("key '" + std::string(token) + "' is not finite");
    }
    keys.push_back(value);
    pos = end;
  }
  return keys;
}

std::string format_key(Key k) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, k);
  return std::string(buf, ptr);
}

}  // namespace ranknet
