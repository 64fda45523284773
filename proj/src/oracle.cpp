#include "qcp/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "qcp/bell.hpp"
#include "qcp/orthogonal.hpp"
#include "qcp/rng.hpp"

namespace qcp {

namespace {

struct Enumerator {
  int n;
  int k;  // hypothesis
  std::vector<double> fail_default;   // indexed by window length
  std::vector<double> fail_mutation;
  ExecutionTree tree;

  void leaf(int consumed, double probability, int below, int above,
            const std::vector<char>& measured, bool any_conclusive) {
    ExecutionLeaf leaf;
    leaf.probability = probability;
    leaf.consumed = consumed;
    for (int p = 1; p <= below; ++p)
      if (!measured[static_cast<std::size_t>(p)]) ++leaf.distilled_default;
    for (int p = above + 1; p <= n; ++p)
      if (!measured[static_cast<std::size_t>(p)]) ++leaf.distilled_mutation;
    if (below + 1 == above)
      leaf.status = above == n + 1 ? TerminalStatus::NoChangeConfirmed
                                   : TerminalStatus::Identified;
    else if (!any_conclusive)
      leaf.status = TerminalStatus::Unresolved;
    else
      leaf.status = TerminalStatus::Identified;
    tree.leaves.push_back(leaf);
  }

  void walk(std::vector<int> window, std::vector<char>& measured, int below, int above,
            int consumed, double probability, bool any_conclusive) {
    if (window.empty()) {
      leaf(consumed, probability, below, above, measured, any_conclusive);
      return;
    }
    const int m = static_cast<int>(window.size());
    const std::size_t mid_index = static_cast<std::size_t>(m / 2);
    const int position = window[mid_index];
    const bool mutated = position >= k;
    const double fail = mutated ? fail_mutation[static_cast<std::size_t>(m)]
                                : fail_default[static_cast<std::size_t>(m)];
    measured[static_cast<std::size_t>(position)] = 1;
    if (fail < 1.0) {
      std::vector<int> next;
      int next_below = below;
      int next_above = above;
      if (mutated) {
        next.assign(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(mid_index));
        next_above = position;
      } else {
        next.assign(window.begin() + static_cast<std::ptrdiff_t>(mid_index) + 1, window.end());
        next_below = position;
      }
      walk(std::move(next), measured, next_below, next_above, consumed + 1,
           probability * (1.0 - fail), true);
    }
    if (fail > 0.0) {
      std::vector<int> next = window;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(mid_index));
      walk(std::move(next), measured, below, above, consumed + 1, probability * fail,
           any_conclusive);
    }
    measured[static_cast<std::size_t>(position)] = 0;
  }
};

}  // namespace

ExactProcessSummary enumerate_exact_process(int n, double overlap, PriorsVariant variant) {
  if (n < 1) throw std::invalid_argument("sequence length must be >= 1");
  if (!(overlap >= 0.0 && overlap < 1.0))
    throw std::invalid_argument("overlap must lie in [0, 1)");
  if (overlap > 0.0 && n > 14)
    throw CapacityError("exact enumeration with branching outcomes is guarded at n <= 14");
  if (overlap == 0.0 && n > 1024)
    throw CapacityError("deterministic exact enumeration is guarded at n <= 1024");

  ExactProcessSummary summary;
  summary.n = n;
  summary.overlap = overlap;
  std::vector<double> fail_default(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> fail_mutation(static_cast<std::size_t>(n) + 1, 0.0);
  for (int m = 1; m <= n; ++m) {
    if (overlap == 0.0) continue;
    const UsdFailureProbs fail = usd_failure_probs(priors_for_window(m, variant), overlap);
    fail_default[static_cast<std::size_t>(m)] = fail.fail_given_default;
    fail_mutation[static_cast<std::size_t>(m)] = fail.fail_given_mutation;
  }

  summary.min_consumed = n + 1;
  summary.max_consumed = 0;
  double total = 0.0;
  for (int k = 1; k <= n + 1; ++k) {
    Enumerator e{n, k, fail_default, fail_mutation, {}};
    e.tree.hypothesis_k = k;
    std::vector<int> window(static_cast<std::size_t>(n));
    std::iota(window.begin(), window.end(), 1);
    std::vector<char> measured(static_cast<std::size_t>(n) + 1, 0);
    e.walk(std::move(window), measured, 0, n + 1, 0, 1.0, false);

    ExecutionTree& tree = e.tree;
    tree.min_consumed = n + 1;
    tree.max_consumed = 0;
    for (const ExecutionLeaf& leaf : tree.leaves) {
      tree.probability_sum += leaf.probability;
      tree.expected_consumed += leaf.probability * leaf.consumed;
      tree.min_consumed = std::min(tree.min_consumed, leaf.consumed);
      tree.max_consumed = std::max(tree.max_consumed, leaf.consumed);
    }
    total += tree.expected_consumed;
    summary.min_consumed = std::min(summary.min_consumed, tree.min_consumed);
    summary.max_consumed = std::max(summary.max_consumed, tree.max_consumed);
    summary.per_hypothesis.push_back(std::move(tree));
  }
  summary.mean_consumed = total / static_cast<double>(n + 1);
  return summary;
}

double exact_expected_consumed(int n, double overlap, PriorsVariant variant) {
  return enumerate_exact_process(n, overlap, variant).mean_consumed;
}

std::vector<BoundRow> iterate_bound_recurrences(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  std::vector<int> worst(static_cast<std::size_t>(n_max) + 1, 0);
  std::vector<int> best(static_cast<std::size_t>(n_max) + 1, 0);
  for (int n = 1; n <= n_max; ++n)
    worst[static_cast<std::size_t>(n)] = worst[static_cast<std::size_t>(n / 2)] + 1;
  if (n_max >= 1) best[1] = 1;
  if (n_max >= 2) best[2] = 1;
  for (int n = 3; n <= n_max; ++n)
    best[static_cast<std::size_t>(n)] = best[static_cast<std::size_t>((n - 1) / 2)] + 1;
  std::vector<BoundRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n)
    rows.push_back({n, worst[static_cast<std::size_t>(n)], best[static_cast<std::size_t>(n)]});
  return rows;
}

std::map<TerminalStatus, double> bell_status_distribution(int n) {
  if (n < 1) throw std::invalid_argument("sequence length must be >= 1");
  if (n > 10) throw CapacityError("Bell status enumeration is guarded at n <= 10");
  std::map<TerminalStatus, double> distribution;
  const double cell = 1.0 / (3.0 * static_cast<double>(n + 1));
  for (int k = 1; k <= n + 1; ++k) {
    for (int mutation = 1; mutation <= 3; ++mutation) {
      // Branch structure and reports are seed-independent; any stream works.
      SeededStream rng(0);
      const BellProtocolResult result =
          run_bell(sample_sequence(SourceModel::bell(n), ChangePoint{k}, mutation), rng);
      distribution[result.status] += cell;
    }
  }
  return distribution;
}

}  // namespace qcp
