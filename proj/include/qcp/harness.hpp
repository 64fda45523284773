#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcp/bell.hpp"
#include "qcp/measurement.hpp"
#include "qcp/model.hpp"
#include "qcp/oracle.hpp"
#include "qcp/result.hpp"
#include "qcp/unambiguous.hpp"

namespace qcp {

enum class OutputFormat { Json, Csv };

/// One batch of repeated protocol runs. The change point (and, for the
/// Bell-set regime, the mutation) is redrawn per trial unless pinned.
///
/// overlap == 1 is accepted for the non-orthogonal regime as a degenerate
/// endpoint: every discrimination attempt fails, so a run consumes all n
/// pairs and distills nothing. It is useful for calibrating the harness.
struct TrialConfig {
  Regime regime = Regime::Orthogonal;
  int n = 1;
  double overlap = 0.0;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  std::optional<int> fixed_change_point;
  std::optional<int> fixed_mutation;
  OutputFormat format = OutputFormat::Json;
  PriorsVariant priors = PriorsVariant::FloorHalf;

  /// Throws std::invalid_argument on any inconsistency.
  void validate() const;

  int mutation_count() const;
};

/// Per-trial flat record, the unit of the CSV output.
struct TrialRow {
  int n = 0;
  int k_true = 0;
  ChangePointReport reported = ChangePointReport::no_change(1);
  TerminalStatus status = TerminalStatus::Unresolved;
  int consumed = 0;
  int distilled_default = 0;
  int distilled_mutation = 0;
  int mutation_true = 1;
  int mutation_reported = 0;  // 0 when the protocol reported none
  std::vector<BranchTag> branch_trace;
};

/// Aggregate statistics over a batch, plus the raw rows.
struct StatsReport {
  TrialConfig config;
  std::uint64_t trials = 0;
  double mean_consumed = 0.0;
  double stderr_consumed = 0.0;
  double mean_distilled = 0.0;
  double stderr_distilled = 0.0;
  /// Fraction of trials whose report pins the true change point exactly
  /// (an exact report equal to k, or a no-change report when k == n+1).
  double identification_rate = 0.0;
  /// Bell-set regime only: fraction of trials with a mutation report equal
  /// to the true mutation, among trials that reported one.
  std::optional<double> mutation_identification_rate;
  std::map<std::string, std::uint64_t> status_histogram;
  std::map<int, std::uint64_t> consumed_histogram;
  std::optional<std::map<std::string, std::uint64_t>> branch_totals;
  std::vector<TrialRow> rows;
};

StatsReport run_trials(const TrialConfig& config);

/// One row of the expected-consumption sweep: the recursion value for a
/// given overlap and length, optionally checked against a Monte Carlo mean.
struct RecursionSweepRow {
  double overlap = 0.0;
  int n = 0;
  double expected = 0.0;
  double saved = 0.0;  // n - expected
  std::optional<double> mc_mean;
  std::optional<double> mc_stderr;
  std::uint64_t mc_trials = 0;
};

std::vector<RecursionSweepRow> build_recursion_sweep(
    int n, const std::vector<double>& overlaps, std::uint64_t mc_trials,
    std::uint64_t master_seed, PriorsVariant variant = PriorsVariant::FloorHalf);

/// One row comparing the exact process average against the window recursion
/// and a Monte Carlo estimate at the same parameters.
struct OracleComparisonRow {
  int n = 0;
  double overlap = 0.0;
  double exact_mean = 0.0;
  double recursion_value = 0.0;
  double abs_gap = 0.0;
  double mc_mean = 0.0;
  double mc_stderr = 0.0;
  std::uint64_t trials = 0;
};

std::vector<OracleComparisonRow> build_oracle_comparison(
    const std::vector<int>& sizes, const std::vector<double>& overlaps,
    std::uint64_t mc_trials, std::uint64_t master_seed,
    PriorsVariant variant = PriorsVariant::FloorHalf);

}  // namespace qcp
