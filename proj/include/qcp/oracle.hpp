#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qcp/measurement.hpp"
#include "qcp/model.hpp"
#include "qcp/result.hpp"

namespace qcp {

/// Raised when an exact enumeration is asked to exceed its size guard.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One terminal branch of the exact process enumeration: the probability of
/// reaching it (conditioned on the hypothesis) and the counts the run ends
/// with.
struct ExecutionLeaf {
  double probability = 0.0;
  int consumed = 0;
  int distilled_default = 0;
  int distilled_mutation = 0;
  TerminalStatus status = TerminalStatus::Unresolved;
};

/// All terminal branches of the discrimination-driven search for one hidden
/// hypothesis, with exact outcome probabilities.
struct ExecutionTree {
  int hypothesis_k = 1;
  std::vector<ExecutionLeaf> leaves;
  double probability_sum = 0.0;
  double expected_consumed = 0.0;
  int min_consumed = 0;
  int max_consumed = 0;
};

/// Exact enumeration summary across all hypotheses (uniform prior).
struct ExactProcessSummary {
  int n = 0;
  double overlap = 0.0;
  std::vector<ExecutionTree> per_hypothesis;
  double mean_consumed = 0.0;
  int min_consumed = 0;
  int max_consumed = 0;
};

/// Walks every outcome branch of the unambiguous-discrimination search (the
/// process as implemented, survivor-rank midpoints and all) and returns exact
/// expectations. Guards: overlap > 0 enumerates up to n = 14; overlap = 0 is
/// deterministic per hypothesis and is allowed up to n = 1024.
ExactProcessSummary enumerate_exact_process(int n, double overlap,
                                            PriorsVariant variant = PriorsVariant::FloorHalf);

/// Mean consumed pairs under the uniform hypothesis prior.
double exact_expected_consumed(int n, double overlap,
                               PriorsVariant variant = PriorsVariant::FloorHalf);

/// Worst/best measurement counts obtained by iterating the defining
/// recurrences rather than the closed forms:
///   worst(n) = worst(floor(n/2)) + 1,      worst(0) = 0
///   best(n)  = best(floor((n-1)/2)) + 1,   best(1) = best(2) = 1
struct BoundRow {
  int n = 0;
  int worst = 0;
  int best = 0;
};

std::vector<BoundRow> iterate_bound_recurrences(int n_max);

/// Exact terminal-status distribution of the Bell-alphabet protocol under
/// uniform hypotheses. The protocol's reports are deterministic given the
/// hypothesis, so this is a finite enumeration; guarded at n <= 10.
std::map<TerminalStatus, double> bell_status_distribution(int n);

}  // namespace qcp
