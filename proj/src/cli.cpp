// SPDX-License-Identifier: Apache-2.0
#include "ranknet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ranknet/analytics.hpp"
#include "ranknet/engine.hpp"
#include "ranknet/error.hpp"
#include "ranknet/io.hpp"
#include "ranknet/netbuild.hpp"
#include "ranknet/verify.hpp"

namespace ranknet::cli {

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open '" + path + "' for reading");
  return read_all(f);
}

// "-" or an empty path writes to `out`.
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open '" + path + "' for writing");
  f << text;
  if (!f.flush()) throw IoFailure("failed writing '" + path + "'");
}

template <typename T>
std::string bracketed(std::span<const T> v) {
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

const std::vector<std::string> kAlgoNames{"binary", "divisor", "prime"};

struct SortArgs {
  std::string algo = "prime";
  std::string input;
  std::string network;
  std::size_t workers = 0;
  bool table = false;
};

std::string cmd_sort(const SortArgs& a, std::istream& in) {
  const auto x = parse_keys(a.input.empty() ? read_all(in) : read_file(a.input));
  if (x.empty()) throw FormatError("no input numbers");
  RankVector pi;
  std::string table;
  if (!a.network.empty()) {
    const auto net = network_from_json(read_file(a.network));
    pi = execute(net, x, {a.workers, 64});
    if (a.table) table = partial_rank_table_to_csv(partial_rank_table(net, x), x);
  } else if (x.size() == 1) {
    pi = {0};
  } else {
    const auto net = build_network(builder_from_string(a.algo), x.size());
    pi = execute(net, x, {a.workers, 64});
    if (a.table) table = partial_rank_table_to_csv(partial_rank_table(net, x), x);
  }
  const auto sorted = apply_permutation(x, pi);
  std::ostringstream os;
  os << "pi=" << bracketed<std::size_t>(pi) << "\n"
     << "sorted=" << bracketed<Key>(sorted) << "\n"
     << table;
  return os.str();
}

struct SeqArgs {
  std::string kind;
  std::uint64_t max_n = 0;
  std::string csv;
  bool per_prime = false;
};

std::string cmd_seq(const SeqArgs& a) {
  if (a.max_n < 2) throw FormatError("--max must be >= 2");
  std::ostringstream os;
  if (a.kind == "all") {
    write_profile_csv(os, a.max_n, a.per_prime);
  } else {
    write_sequence_csv(os, sequence_kind_from_string(a.kind), a.max_n);
  }
  return os.str();
}

std::string cmd_build(Builder algo, std::size_t n) {
  const auto net = build_network(algo, n);
  const auto report = validate_network(net);
  std::ostringstream os;
  os << "builder=" << to_string(net.builder) << " n=" << net.n << " levels=" << net.levels.size()
     << " comparators=" << net.comparator_count() << "\n";
  for (std::size_t li = 0; li < net.levels.size(); ++li) {
    os << "L" << li << ":";
    for (const auto& c : net.levels[li].comparators) os << " " << bracketed<std::size_t>(c.indices);
    os << "\n";
  }
  os << "valid=" << (report.ok() ? "yes" : "no") << " pairs=" << report.pairs_covered
     << " binary_equivalent=" << report.binary_equivalent << "\n";
  for (const auto& v : report.violations) os << "  " << v << "\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-summing comparator networks", "ranknet"};
  app.require_subcommand(1);

  SortArgs sort_args;
  auto* sort = app.add_subcommand("sort", "Rank and sort a list of numbers with a network");
  sort->add_option("--algo", sort_args.algo, "binary, divisor or prime")
      ->check(CLI::IsMember(kAlgoNames));
  sort->add_option("--input", sort_args.input, "Input file (default: standard input)");
  sort->add_option("--network", sort_args.network, "Run a network loaded from JSON instead of building one");
  sort->add_option("--workers", sort_args.workers, "Worker threads, 0 = auto");
  sort->add_flag("--table", sort_args.table, "Also print the partial-rank table as CSV");

  SeqArgs seq_args;
  auto* seq = app.add_subcommand("seq", "Emit a counting sequence as CSV");
  seq->add_option("--kind", seq_args.kind, "levels, comparators, adds or all")->required();
  seq->add_option("--max", seq_args.max_n, "Largest N")->required();
  seq->add_option("--csv", seq_args.csv, "Output file (default: standard output)");
  seq->add_flag("--per-prime", seq_args.per_prime, "With --kind all, add per-prime coefficient columns");

  VerifyOptions verify_opts;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Check the network and counting invariants");
  verify->add_option("--max", verify_opts.max_n, "Largest N")->required();
  verify->add_option("--samples", verify_opts.samples, "Random inputs per builder and N");
  verify->add_option("--seed", verify_opts.seed, "Random seed");
  verify->add_flag("--inject-fault", inject_fault)->group("");

  std::size_t export_n = 0;
  std::string export_algo = "prime";
  std::string export_format = "json";
  std::string export_out;
  auto* exp = app.add_subcommand("export", "Write a network as JSON or DOT");
  exp->add_option("--n", export_n, "Network size")->required();
  exp->add_option("--algo", export_algo, "binary, divisor or prime")
      ->check(CLI::IsMember(kAlgoNames));
  exp->add_option("--format", export_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  exp->add_option("--out", export_out, "Output file, - for standard output")->required();

  std::uint64_t analyze_n = 0;
  auto* analyze = app.add_subcommand("analyze", "Print the level and comparator counts for N");
  analyze->add_option("--n", analyze_n, "Sequence length")->required();

  std::size_t build_n = 0;
  std::string build_algo = "prime";
  auto* build = app.add_subcommand("build", "Print a network's levels and validation result");
  build->add_option("--n", build_n, "Network size")->required();
  build->add_option("--algo", build_algo, "binary, divisor or prime")
      ->check(CLI::IsMember(kAlgoNames));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sort) {
      out << cmd_sort(sort_args, in);
    } else if (*seq) {
      write_output(seq_args.csv, cmd_seq(seq_args), out);
    } else if (*verify) {
      if (verify_opts.max_n < 2) throw FormatError("--max must be >= 2");
      if (inject_fault) verify_opts.fault = InjectedFault::DropLastPrimeLevel;
      const auto report = run_verification(verify_opts);
      for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed) out << ": " << c.detail;
        out << "\n";
      }
      return report.ok() ? kOk : kVerifyFailed;
    } else if (*exp) {
      const auto net = build_network(builder_from_string(export_algo), export_n);
      write_output(export_out, export_format == "dot" ? network_to_dot(net) : network_to_json(net) + "\n", out);
    } else if (*analyze) {
      out << profile_to_json(complexity_profile(analyze_n)) << "\n";
    } else if (*build) {
      out << cmd_build(builder_from_string(build_algo), build_n);
    }
  } catch (const IoFailure& e) {
    err << "ranknet: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    err << "ranknet: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace ranknet::cli
