#include "qcp/harness.hpp"

#include <algorithm>
#include <cmath>

#include "qcp/orthogonal.hpp"

namespace qcp {

namespace {

double sample_stderr(std::uint64_t trials, std::uint64_t sum, std::uint64_t sum_sq) {
  if (trials < 2) return 0.0;
  const double t = static_cast<double>(trials);
  const double sx = static_cast<double>(sum);
  const double sxx = static_cast<double>(sum_sq);
  const double variance = std::max(0.0, (sxx - sx * sx / t) / (t - 1.0));
  return std::sqrt(variance / t);
}

int draw_mutation(int mutation_count, RandomStream& rng) {
  if (mutation_count == 1) return 1;
  const int idx = 1 + static_cast<int>(rng.next_unit() * mutation_count);
  return std::min(idx, mutation_count);
}

}  // namespace

int TrialConfig::mutation_count() const { return regime == Regime::BellSet ? 3 : 1; }

void TrialConfig::validate() const {
  if (n < 1) throw std::invalid_argument("sequence length must be >= 1");
  if (trials < 1) throw std::invalid_argument("trial count must be >= 1");
  switch (regime) {
    case Regime::Orthogonal:
      if (overlap != 0.0)
        throw std::invalid_argument("orthogonal regime requires overlap 0");
      break;
    case Regime::Nonorthogonal:
      if (!(overlap > 0.0 && overlap <= 1.0))
        throw std::invalid_argument("nonorthogonal regime requires 0 < overlap <= 1");
      break;
    case Regime::BellSet:
      if (overlap != 0.0)
        throw std::invalid_argument("Bell regime requires overlap 0");
      break;
  }
  if (fixed_change_point &&
      (*fixed_change_point < 1 || *fixed_change_point > n + 1))
    throw std::invalid_argument("pinned change point must lie in [1, n+1]");
  if (fixed_mutation && (*fixed_mutation < 1 || *fixed_mutation > mutation_count()))
    throw std::invalid_argument("pinned mutation is out of range for this regime");
}

StatsReport run_trials(const TrialConfig& config) {
  config.validate();

  StatsReport report;
  report.config = config;
  report.trials = config.trials;
  report.rows.reserve(static_cast<std::size_t>(config.trials));

  const bool bell = config.regime == Regime::BellSet;
  if (bell) report.branch_totals.emplace();

  std::uint64_t consumed_sum = 0, consumed_sq = 0;
  std::uint64_t distilled_sum = 0, distilled_sq = 0;
  std::uint64_t identified = 0;
  std::uint64_t mutation_reports = 0, mutation_correct = 0;

  for (std::uint64_t t = 0; t < config.trials; ++t) {
    SeededStream rng = SeededStream::for_trial(config.master_seed, t);
    const int k = config.fixed_change_point ? *config.fixed_change_point
                                            : draw_change_point(config.n, rng).k;
    const int mutation = config.fixed_mutation
                             ? *config.fixed_mutation
                             : draw_mutation(config.mutation_count(), rng);
    const SequenceInstance seq =
        sample_sequence(config.n, config.mutation_count(), ChangePoint{k}, mutation);

    TrialRow row;
    row.n = config.n;
    row.k_true = k;
    row.mutation_true = mutation;

    ProtocolResult result;
    switch (config.regime) {
      case Regime::Orthogonal:
        result = run_orthogonal(seq);
        break;
      case Regime::Nonorthogonal:
        result = run_unambiguous(seq, config.overlap, rng, config.priors);
        break;
      case Regime::BellSet: {
        BellProtocolResult bell_result = run_bell(seq, rng);
        row.mutation_reported = bell_result.reported_mutation.value_or(0);
        row.branch_trace = bell_result.branch_trace;
        for (BranchTag tag : bell_result.branch_trace) ++(*report.branch_totals)[to_string(tag)];
        if (bell_result.reported_mutation) {
          ++mutation_reports;
          if (*bell_result.reported_mutation == mutation) ++mutation_correct;
        }
        result = std::move(bell_result);
        break;
      }
    }

    row.reported = result.reported_change_point;
    row.status = result.status;
    row.consumed = result.consumed;
    row.distilled_default = result.distilled_default;
    row.distilled_mutation = result.distilled_mutation;

    const auto consumed = static_cast<std::uint64_t>(result.consumed);
    const auto distilled = static_cast<std::uint64_t>(result.distilled_total());
    consumed_sum += consumed;
    consumed_sq += consumed * consumed;
    distilled_sum += distilled;
    distilled_sq += distilled * distilled;

    const ChangePointReport& reported = result.reported_change_point;
    const bool hit =
        (reported.kind() == ChangePointReport::Kind::Exact && reported.exact_value() == k) ||
        (reported.kind() == ChangePointReport::Kind::NoChange && k == config.n + 1);
    if (hit) ++identified;

    ++report.status_histogram[to_string(result.status)];
    ++report.consumed_histogram[result.consumed];
    report.rows.push_back(std::move(row));
  }

  const double t = static_cast<double>(config.trials);
  report.mean_consumed = static_cast<double>(consumed_sum) / t;
  report.stderr_consumed = sample_stderr(config.trials, consumed_sum, consumed_sq);
  report.mean_distilled = static_cast<double>(distilled_sum) / t;
  report.stderr_distilled = sample_stderr(config.trials, distilled_sum, distilled_sq);
  report.identification_rate = static_cast<double>(identified) / t;
  if (bell)
    report.mutation_identification_rate =
        mutation_reports == 0
            ? 1.0
            : static_cast<double>(mutation_correct) / static_cast<double>(mutation_reports);
  return report;
}

std::vector<RecursionSweepRow> build_recursion_sweep(int n,
                                                     const std::vector<double>& overlaps,
                                                     std::uint64_t mc_trials,
                                                     std::uint64_t master_seed,
                                                     PriorsVariant variant) {
  std::vector<RecursionSweepRow> rows;
  rows.reserve(overlaps.size());
  std::uint64_t offset = 0;
  for (double s : overlaps) {
    RecursionSweepRow row;
    row.overlap = s;
    row.n = n;
    row.expected = expected_consumed(n, s, variant);
    row.saved = static_cast<double>(n) - row.expected;
    if (mc_trials > 0) {
      TrialConfig config;
      config.regime = s == 0.0 ? Regime::Orthogonal : Regime::Nonorthogonal;
      config.n = n;
      config.overlap = s;
      config.trials = mc_trials;
      config.master_seed = master_seed + offset;
      config.priors = variant;
      const StatsReport report = run_trials(config);
      row.mc_mean = report.mean_consumed;
      row.mc_stderr = report.stderr_consumed;
      row.mc_trials = mc_trials;
    }
    rows.push_back(row);
    ++offset;
  }
  return rows;
}

std::vector<OracleComparisonRow> build_oracle_comparison(const std::vector<int>& sizes,
                                                         const std::vector<double>& overlaps,
                                                         std::uint64_t mc_trials,
                                                         std::uint64_t master_seed,
                                                         PriorsVariant variant) {
  std::vector<OracleComparisonRow> rows;
  rows.reserve(sizes.size() * overlaps.size());
  std::uint64_t offset = 0;
  for (int n : sizes) {
    for (double s : overlaps) {
      OracleComparisonRow row;
      row.n = n;
      row.overlap = s;
      row.exact_mean = exact_expected_consumed(n, s, variant);
      row.recursion_value = expected_consumed(n, s, variant);
      row.abs_gap = std::abs(row.exact_mean - row.recursion_value);
      if (mc_trials > 0) {
        TrialConfig config;
        config.regime = s == 0.0 ? Regime::Orthogonal : Regime::Nonorthogonal;
        config.n = n;
        config.overlap = s;
        config.trials = mc_trials;
        config.master_seed = master_seed + offset;
        config.priors = variant;
        const StatsReport report = run_trials(config);
        row.mc_mean = report.mean_consumed;
        row.mc_stderr = report.stderr_consumed;
        row.trials = mc_trials;
      }
      rows.push_back(row);
      ++offset;
    }
  }
  return rows;
}

}  // namespace qcp
