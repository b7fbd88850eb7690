#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tconn/instance.hpp"

namespace tconn {

enum class BenchMode { Mcs, Paths, Dcs, Brute };

std::string_view to_string(BenchMode mode);
/// Throws InputError for unknown names.
BenchMode parse_bench_mode(std::string_view name);

/// One benchmark run. `terminals` is |T| (mcs, brute), |R| (paths) or
/// |Z1| + |Z2| (dcs). `bound_ln` is the natural log of the applicable
/// count bound, absent when none applies.
struct RunReport {
  std::string instance;
  int n = 0;
  int m = 0;
  int terminals = 0;
  BenchMode mode = BenchMode::Mcs;
  std::uint64_t emitted = 0;
  std::uint64_t raw = 0;
  std::optional<double> bound_ln;
  double wall_seconds = 0;
  std::uint64_t nodes = 0;
  std::string status = "ok";

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct BenchInstance {
  std::string id;
  Instance instance;
};

/// Runs every instance, in parallel when jobs > 1. Failures are recorded in
/// `status` and do not stop the run. Reports keep the input order.
std::vector<RunReport> run_benchmark(const std::vector<BenchInstance>& instances, BenchMode mode, int jobs = 1);

RunReport run_one(const BenchInstance& instance, BenchMode mode);

std::string csv_header();
std::string to_csv_row(const RunReport& r);
/// Parses header plus rows as written by csv_header / to_csv_row.
std::vector<RunReport> parse_csv(std::string_view text);

}  // namespace tconn
