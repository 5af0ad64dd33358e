// Batch front end: reads job lines on stdin, writes Euler factors on stdout.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "g2euler/batch.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Euler factors of genus 2 curves at odd primes of almost good reduction"};

  g2euler::BatchOptions batch;
  g2euler::BenchOptions bench;
  std::optional<std::uint64_t> nonsquare;
  bool run_bench = false;

  app.add_option("--nonsquare", nonsquare, "Quadratic nonresidue mod p used for square roots");
  app.add_flag("--check-prime", batch.check_prime, "Reject lines whose p fails a Miller-Rabin test");
  app.add_flag("--stable", batch.stable, "Emit results in input order");
  app.add_option("--jobs", batch.jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", batch.seed, "Seed for randomised steps");
  app.add_flag("--bench", run_bench, "Time generated instances instead of reading stdin");
  app.add_option("--iters", bench.iters, "Repetitions per timed instance")->check(CLI::PositiveNumber);
  app.add_option("--per-type", bench.per_type, "Benchmark instances per cluster type")->check(CLI::PositiveNumber);
  app.add_option("--p-min", bench.p_lo, "Smallest benchmark prime");
  app.add_option("--p-max", bench.p_hi, "Largest benchmark prime");
  app.add_option("--max-depth", bench.max_depth, "Largest constructed cluster depth")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  batch.nonsquare = nonsquare;

  if (run_bench) {
    bench.seed = batch.seed ? batch.seed : 1;
    try {
      std::cout << g2euler::format_bench(g2euler::run_bench(bench));
    } catch (const g2euler::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
    return std::cout ? 0 : 1;
  }

  std::ios::sync_with_stdio(false);
  return g2euler::run_batch(std::cin, std::cout, std::cerr, batch);
}
