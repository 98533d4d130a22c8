// SPDX-License-Identifier: Apache-2.0
#include "ranknet/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "ranknet/analytics.hpp"
#include "ranknet/engine.hpp"
#include "ranknet/error.hpp"
#include "ranknet/io.hpp"
#include "ranknet/netbuild.hpp"

namespace ranknet {

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

namespace {

constexpr Builder kBuilders[] = {Builder::Binary, Builder::Divisor, Builder::Prime};

Network build_with_fault(Builder b, std::size_t n, InjectedFault fault) {
  auto net = build_network(b, n);
  if (fault == InjectedFault::DropLastPrimeLevel && b == Builder::Prime) net.levels.pop_back();
  return net;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    if constexpr (std::is_floating_point_v<T>) {
      os << format_key(v[i]);
    } else {
      os << v[i];
    }
  }
  os << "]";
  return os.str();
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Each check returns an empty string on success, else the first counterexample.
using Check = std::function<std::string()>;

std::string check_pair_coverage(const VerifyOptions& opts) {
  for (auto b : kBuilders) {
    for (std::uint64_t n = 2; n <= opts.max_n; ++n) {
      const auto report = validate_network(build_with_fault(b, n, opts.fault));
      if (!report.ok()) {
        return std::string(to_string(b)) + " network, N=" + std::to_string(n) + ": " + report.violations.front();
      }
      if (report.binary_equivalent != binary_equivalent(n)) {
        return std::string(to_string(b)) + " network, N=" + std::to_string(n) +
               ": binary-equivalent comparisons " + std::to_string(report.binary_equivalent);
      }
    }
  }
  return {};
}

std::string check_oracle(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  for (auto b : kBuilders) {
    for (std::uint64_t n = 2; n <= opts.max_n; ++n) {
      const auto net = build_with_fault(b, n, opts.fault);
      std::unique_ptr<Executor> exec;
      try {
        exec = std::make_unique<Executor>(net, ExecOptions{1, 64});
      } catch (const ValidationError& e) {
        return std::string(to_string(b)) + " network, N=" + std::to_string(n) + ": " + e.what();
      }
      for (std::size_t s = 0; s < opts.samples; ++s) {
        KeyVector x(n);
        if (s % 2 == 0) {
          std::uniform_int_distribution<int> dist(0, static_cast<int>(n / 2));
          for (auto& v : x) v = dist(rng);
        } else {
          std::uniform_real_distribution<double> dist(-1e6, 1e6);
          for (auto& v : x) v = dist(rng);
        }
        const auto got = exec->run(x);
        const auto expected = stable_rank(x);
        const auto via_matrix = row_sum_ranks(comparison_matrix(x));
        if (got != expected || via_matrix != expected) {
          return std::string(to_string(b)) + " network, N=" + std::to_string(n) + ", x=" + join(x) +
                 ": network gave " + join(got) + ", stable rank " + join(expected) + ", matrix rows " +
                 join(via_matrix);
        }
      }
    }
  }
  return {};
}

std::string check_network_counts(const VerifyOptions& opts) {
  for (std::uint64_t n = 2; n <= opts.max_n; ++n) {
    const auto net = build_with_fault(Builder::Prime, n, opts.fault);
    PrimeCounts levels;
    PrimeCounts comps;
    for (const auto& level : net.levels) {
      ++levels[level.comparators.front().arity()];
      for (const auto& c : level.comparators) ++comps[c.arity()];
    }
    if (levels != level_coefficients(n) || comps != comparator_coefficients(n) ||
        net.levels.size() != partial_rank_count(n) || net.comparator_count() != total_comparators(n)) {
      return "prime network N=" + std::to_string(n) + " has " + std::to_string(net.levels.size()) +
             " levels and " + std::to_string(net.comparator_count()) + " comparators, closed form gives " +
             std::to_string(partial_rank_count(n)) + " and " + std::to_string(total_comparators(n));
    }
  }
  return {};
}

std::string check_maundy(const VerifyOptions& opts) {
  for (std::uint64_t n = 2; n <= opts.max_n; ++n) {
    if (maundy_a(n) != partial_rank_count(n)) {
      return "N=" + std::to_string(n) + ": a(N)=" + std::to_string(maundy_a(n)) +
             " but |L_N|=" + std::to_string(partial_rank_count(n));
    }
  }
  return {};
}

std::string check_bounds(const VerifyOptions& opts) {
  for (std::uint64_t n = 2; n <= opts.max_n; ++n) {
    const auto levels = partial_rank_count(n);
    const auto comps = total_comparators(n);
    const bool pow2 = is_power_of_two(n);
    if (levels < 1 || levels > n - 1 || (levels == n - 1) != pow2) {
      return "N=" + std::to_string(n) + ": |L_N|=" + std::to_string(levels);
    }
    if (comps < 1 || comps > binary_equivalent(n) || (comps == binary_equivalent(n)) != pow2) {
      return "N=" + std::to_string(n) + ": |C_N|=" + std::to_string(comps);
    }
  }
  return {};
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& opts) {
  const std::pair<const char*, Check> checks[] = {
      {"pair-coverage", [&] { return check_pair_coverage(opts); }},
      {"oracle-equivalence", [&] { return check_oracle(opts); }},
      {"network-counts", [&] { return check_network_counts(opts); }},
      {"maundy-identity", [&] { return check_maundy(opts); }},
      {"bounds", [&] { return check_bounds(opts); }},
  };
  VerifyReport report;
  for (const auto& [name, check] : checks) {
    auto detail = check();
    const bool passed = detail.empty();
    report.checks.push_back({name, passed, std::move(detail)});
    if (!passed) break;
  }
  return report;
}

}  // namespace ranknet
