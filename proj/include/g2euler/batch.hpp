#pragma once

// Line protocol and batch driver.
//
// Input lines are `p:[f0,...,f6]` or `p:[f0,...,f6]:[h0,...,h3]`; whitespace is
// ignored and trailing zero coefficients may be omitted. Each result line is
// `p:[1,a1,a2,p*a1,p^2]`, the coefficients of 1 + a1 T + a2 T^2 + p a1 T^3 + p^2 T^4,
// or `ERR:<token>` on a per-line failure.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2euler/oracle.hpp"

namespace g2euler {

struct JobLine {
  u64 p = 0;
  IntPoly f;
  std::optional<IntPoly> h;
};

JobLine parse_job_line(std::string_view line);

std::string format_result(u64 p, const LPoly2& l);
std::string format_error(ErrorCode code);

struct BatchOptions {
  std::optional<u64> nonsquare;
  bool check_prime = false;
  /// Emit results in input order; otherwise in completion order.
  bool stable = false;
  /// Worker threads; 0 keeps the OpenMP default.
  int jobs = 0;
  u64 seed = 0;
  EulerOptions euler;
};

struct BatchSummary {
  std::size_t lines = 0;
  std::size_t parse_failures = 0;
  std::size_t errors = 0;
};

/// Result line for one input line; never throws for per-line failures.
std::string process_line(std::string_view line, std::size_t index, const BatchOptions& opts, bool* parse_failed = nullptr);

/// Processes every non-blank line; returns the process exit code
/// (0 normally, 1 on an output failure, 2 if no line could be parsed).
int run_batch(std::istream& in, std::ostream& out, std::ostream& diag, const BatchOptions& opts,
              BatchSummary* summary = nullptr);

struct BenchOptions {
  u64 p_lo = 3;
  u64 p_hi = (u64{1} << 20) - 1;
  int per_type = 250;
  int iters = 1;
  int max_depth = 8;
  u64 seed = 1;
};

struct BenchRow {
  ClusterType type = ClusterType::T1;
  std::size_t count = 0;
  std::size_t errors = 0;
  double mean_ms = 0, stddev_ms = 0, median_ms = 0, max_ms = 0;
};

/// Times euler_factor on generated instances, one row per cluster type.
std::vector<BenchRow> run_bench(const BenchOptions& opts);
std::string format_bench(const std::vector<BenchRow>& rows);

}  // namespace g2euler
