// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ranknet::cli {

/// Exit codes of the ranknet tool.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kIoError = 3,
};

/// Runs the tool with args (without the program name). Standard input is read
/// from `in` when `sort` gets no --input file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ranknet::cli
