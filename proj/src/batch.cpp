#include "g2euler/batch.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace g2euler {

namespace {

[[noreturn]] void parse_fail(const std::string& why) { fail(ErrorCode::ParseError, why); }

u64 parse_prime_field(std::string_view s) {
  if (s.empty() || s.size() > 19) parse_fail("bad prime field");
  u64 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') parse_fail("bad prime field");
    v = v * 10 + static_cast<u64>(c - '0');
  }
  return v;
}

std::vector<mpz_class> parse_list(std::string_view s, std::size_t max_len) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') parse_fail("coefficient list must be bracketed");
  s = s.substr(1, s.size() - 2);
  std::vector<mpz_class> out;
  while (true) {
    const std::size_t comma = s.find(',');
    std::string_view tok = s.substr(0, comma);
    std::size_t start = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (tok.size() == start) parse_fail("empty coefficient");
    for (std::size_t i = start; i < tok.size(); ++i)
      if (tok[i] < '0' || tok[i] > '9') parse_fail("bad coefficient");
    out.emplace_back(std::string(tok.substr(tok[0] == '+' ? 1 : 0)), 10);
    if (out.size() > max_len) parse_fail("too many coefficients");
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return out;
}

std::string strip_space(std::string_view line) {
  std::string s;
  for (char c : line)
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') s.push_back(c);
  return s;
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

Rng line_rng(u64 seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(static_cast<u64>(index) >> 32)};
  return Rng(seq);
}

}  // namespace

JobLine parse_job_line(std::string_view line) {
  const std::string s = strip_space(line);
  std::vector<std::string_view> parts;
  std::string_view rest = s;
  for (;;) {
    const std::size_t colon = rest.find(':');
    parts.push_back(rest.substr(0, colon));
    if (colon == std::string_view::npos) break;
    rest = rest.substr(colon + 1);
  }
  if (parts.size() != 2 && parts.size() != 3) parse_fail("expected p:[f] or p:[f]:[h]");
  JobLine job;
  job.p = parse_prime_field(parts[0]);
  try {
    job.f = int_poly(parse_list(parts[1], kMaxDegree + 1));
    if (parts.size() == 3) job.h = int_poly(parse_list(parts[2], 4));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegreeError) parse_fail("too many coefficients");
    throw;
  }
  return job;
}

std::string format_result(u64 p, const LPoly2& l) { return std::to_string(p) + ":" + to_string(l); }

std::string format_error(ErrorCode code) { return "ERR:" + std::string(error_token(code)); }

std::string process_line(std::string_view line, std::size_t index, const BatchOptions& opts, bool* parse_failed) {
  if (parse_failed) *parse_failed = false;
  JobLine job;
  try {
    job = parse_job_line(line);
  } catch (const Error& e) {
    if (parse_failed) *parse_failed = true;
    return format_error(e.code());
  }
  try {
    if (opts.check_prime && !is_prime_u64(job.p)) fail(ErrorCode::NotOddPrime, "p is not prime");
    EulerInput in;
    in.f = job.f;
    in.h = job.h;
    in.p = job.p;
    in.nonsquare = opts.nonsquare;
    Rng rng = line_rng(opts.seed, index);
    return format_result(job.p, euler_factor(in, rng, opts.euler));
  } catch (const Error& e) {
    return format_error(e.code());
  }
}

int run_batch(std::istream& in, std::ostream& out, std::ostream& diag, const BatchOptions& opts, BatchSummary* summary) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!blank(line)) lines.push_back(line);
  if (in.bad()) {
    diag << "error: failed reading input\n";
    return 1;
  }

  const long count = static_cast<long>(lines.size());
  std::vector<std::string> results(lines.size());
  std::vector<char> parse_failed(lines.size(), 0);
  std::size_t errors = 0;
  const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) reduction(+ : errors)
  for (long i = 0; i < count; ++i) {
    bool pf = false;
    std::string r = process_line(lines[static_cast<std::size_t>(i)], static_cast<std::size_t>(i), opts, &pf);
    parse_failed[static_cast<std::size_t>(i)] = pf;
    if (r.rfind("ERR:", 0) == 0) ++errors;
    if (opts.stable) {
      results[static_cast<std::size_t>(i)] = std::move(r);
    } else {
#pragma omp critical(g2euler_output)
      {
        out << r << '\n';
        if (pf) diag << "parse error: " << lines[static_cast<std::size_t>(i)] << '\n';
      }
    }
  }

  std::size_t parse_failures = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (opts.stable) {
      out << results[i] << '\n';
      if (parse_failed[i]) diag << "parse error: " << lines[i] << '\n';
    }
    parse_failures += parse_failed[i] ? 1 : 0;
  }
  out.flush();
  if (summary) *summary = {lines.size(), parse_failures, errors};
  if (!out) return 1;
  if (!lines.empty() && parse_failures == lines.size()) return 2;
  return 0;
}

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  std::vector<BenchRow> rows;
  using clock = std::chrono::steady_clock;
  const int iters = std::max(1, opts.iters);
  Rng prime_rng(opts.seed);
  u64 serial = 0;
  for (ClusterType t : {ClusterType::T1, ClusterType::T2a, ClusterType::T2b, ClusterType::T4}) {
    BenchRow row;
    row.type = t;
    std::vector<double> times;
    for (int i = 0; i < opts.per_type; ++i) {
      const u64 p = random_odd_prime(opts.p_lo, opts.p_hi, prime_rng);
      OracleOptions oo;
      oo.compute_expected = p <= 1024;
      const OracleInstance inst = random_instance(t, p, opts.max_depth, opts.seed * 1000003 + serial++, oo);
      EulerInput in;
      in.f = inst.f;
      in.p = p;
      Rng rng(inst.seed);
      try {
        LPoly2 l;
        const auto start = clock::now();
        for (int k = 0; k < iters; ++k) l = euler_factor(in, rng);
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count() / iters;
        times.push_back(ms);
        if (inst.has_expected && !(l == inst.expected)) ++row.errors;
      } catch (const Error&) {
        ++row.errors;
      }
    }
    row.count = times.size();
    if (!times.empty()) {
      double sum = 0, sq = 0;
      for (double x : times) sum += x;
      row.mean_ms = sum / static_cast<double>(times.size());
      for (double x : times) sq += (x - row.mean_ms) * (x - row.mean_ms);
      row.stddev_ms = std::sqrt(sq / static_cast<double>(times.size()));
      std::sort(times.begin(), times.end());
      row.median_ms = times[times.size() / 2];
      row.max_ms = times.back();
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_bench(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-5s %8s %7s %12s %12s %12s %12s\n", "type", "count", "errors", "mean_ms",
                "stddev_ms", "median_ms", "max_ms");
  os << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-5s %8zu %7zu %12.4f %12.4f %12.4f %12.4f\n", std::string(type_name(r.type)).c_str(),
                  r.count, r.errors, r.mean_ms, r.stddev_ms, r.median_ms, r.max_ms);
    os << buf;
  }
  return os.str();
}

}  // namespace g2euler
