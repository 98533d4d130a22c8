// SPDX-License-Identifier: Apache-2.0
//
// Self-check of the invariants behind `ranknet verify`.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ranknet {

enum class InjectedFault {
  None,
  DropLastPrimeLevel,  // prime networks lose their final level
};

struct VerifyOptions {
  std::uint64_t max_n = 64;
  std::size_t samples = 100;
  std::uint64_t seed = 0x5eed;
  InjectedFault fault = InjectedFault::None;
};

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample when failed
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;

  bool ok() const;
};

/// Runs pair-coverage, oracle-equivalence, network-counts, maundy-identity and
/// bounds in that order, stopping after the first failed check.
VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace ranknet
