#pragma once

// Seeded Monte Carlo sweeps of P(G^(r)(n, p) has a Hamiltonian l-cycle)
// over a grid of C = p / p*(n).

#include "hyperham/cycle_algebra.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyperham {

struct SweepConfig {
  unsigned r = 3;
  unsigned ell = 2;
  std::vector<unsigned> n_list;
  std::vector<double> c_grid;
  std::uint64_t trials = 100;
  std::uint64_t master_seed = 0;
  /// Per-trial node budget; 0 = unlimited.
  std::uint64_t solver_budget = 0;
  /// 0 = hardware concurrency.
  unsigned thread_count = 0;
  std::string output_path;
  /// Share trial streams across the C-grid so that edge sets are nested in C.
  bool coupled = false;

  /// Throws ParameterError on s not dividing some n, trials == 0, or an unsorted C-grid.
  void validate() const;
};

SweepConfig sweep_config_from_json(const std::string& json_text);
std::string sweep_config_to_json(const SweepConfig& config);

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval; [0, 1] when trials == 0.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

struct SweepCell {
  unsigned n = 0;
  unsigned r = 0;
  unsigned ell = 0;
  double c = 0.0;
  double p = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t unknowns = 0;
  /// successes / (trials - unknowns); NaN when every trial is unknown.
  double p_hat = 0.0;
  Interval ci;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;

  std::uint64_t failures() const noexcept { return trials - successes - unknowns; }
};

/// Stream id of one trial: hash(n, C-index, trial-index).
std::uint64_t trial_stream(unsigned n, std::uint64_t c_index, std::uint64_t trial) noexcept;

/// Outcome of one trial: sample G^(r)(n, p) from (seed, stream), then solve.
enum class TrialOutcome : std::uint8_t { kSuccess, kFailure, kUnknown };
TrialOutcome run_trial(const CycleParameters& params, double p, std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t budget);

/// `trials` independent trials at edge probability p with streams
/// trial_stream(n, c_index, i). The outcome is independent of `threads`.
SweepCell estimate_prob(const CycleParameters& params, double p, std::uint64_t trials, std::uint64_t seed,
                        std::uint64_t budget, unsigned threads = 1, std::uint64_t c_index = 0);

struct SweepOptions {
  /// Reuse rows for (n, C) already present in the output file.
  bool resume = false;
};

/// One cell per (n, C) in n-major order, computed in parallel. Writes the CSV
/// to config.output_path when it is non-empty.
std::vector<SweepCell> run_sweep(const SweepConfig& config, const SweepOptions& options = {});

inline constexpr const char* kSweepCsvHeader = "n,r,ell,c,p,trials,successes,unknowns,p_hat,ci_low,ci_high,seed";

/// Shortest round-trip decimal form, '.' as decimal point.
std::string format_double(double x);
std::string csv_row(const SweepCell& cell);
void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& cells);
/// Parses rows written by write_sweep_csv (header required).
std::vector<SweepCell> read_sweep_csv(std::istream& in);

}  // namespace hyperham
