#include "qcp/unambiguous.hpp"

#include <numeric>

#include "qcp/orthogonal.hpp"

namespace qcp {

RecursionTable build_recursion_table(int n, double overlap, PriorsVariant variant) {
  if (n < 0) throw std::invalid_argument("sequence length must be >= 0");
  if (!(overlap >= 0.0 && overlap <= 1.0))
    throw std::invalid_argument("overlap must lie in [0, 1]");
  RecursionTable table;
  table.overlap = overlap;
  table.variant = variant;
  table.entries.resize(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    const PriorPair priors = priors_for_window(m, variant);
    UsdFailureProbs fail{0.0, 0.0};
    if (overlap == 1.0)
      fail = {1.0, 1.0};
    else if (overlap > 0.0)
      fail = usd_failure_probs(priors, overlap);
    RecursionEntry& e = table.entries[static_cast<std::size_t>(m)];
    e.conclusive_default = priors.p_default * (1.0 - fail.fail_given_default);
    e.conclusive_mutation = priors.p_mutation * (1.0 - fail.fail_given_mutation);
    e.fail = fail.aggregate(priors);
    e.expected_consumed = 1.0 +
                          e.fail * table.entries[static_cast<std::size_t>(m - 1)].expected_consumed +
                          e.conclusive_default *
                              table.entries[static_cast<std::size_t>((m - 1) / 2)].expected_consumed +
                          e.conclusive_mutation *
                              table.entries[static_cast<std::size_t>(m / 2)].expected_consumed;
  }
  return table;
}

double expected_consumed(int n, double overlap, PriorsVariant variant) {
  return build_recursion_table(n, overlap, variant)
      .entries[static_cast<std::size_t>(n)]
      .expected_consumed;
}

double average_distilled(int n, double overlap, PriorsVariant variant) {
  return static_cast<double>(n) - expected_consumed(n, overlap, variant);
}

ProtocolResult run_unambiguous(const SequenceInstance& seq, double overlap,
                               RandomStream& rng, PriorsVariant variant) {
  if (!(overlap >= 0.0 && overlap <= 1.0))
    throw std::invalid_argument("overlap must lie in [0, 1]");
  if (overlap == 0.0) return run_orthogonal(seq);

  const int n = seq.n();
  ProtocolResult result;
  std::vector<int> window(static_cast<std::size_t>(n));
  std::iota(window.begin(), window.end(), 1);
  std::vector<char> measured(static_cast<std::size_t>(n) + 1, 0);
  int below = 0;      // all positions <= below are established default (k > below)
  int above = n + 1;  // position `above` is established mutated (k <= above)

  while (!window.empty()) {
    const int m = static_cast<int>(window.size());
    const std::size_t mid_index = static_cast<std::size_t>(m / 2);
    const int position = window[mid_index];
    measured[static_cast<std::size_t>(position)] = 1;

    if (overlap == 1.0) {
      // Identical states cannot be discriminated; every attempt fails.
      result.transcript.push_back({position, MeasurementKind::UnambiguousDiscrimination,
                                   to_string(UsdOutcome::Inconclusive)});
      window.erase(window.begin() + static_cast<std::ptrdiff_t>(mid_index));
      continue;
    }

    const PriorPair priors = priors_for_window(m, variant);
    const UsdOutcome outcome = usd_measure(seq.label(position), priors, overlap, rng);
    result.transcript.push_back(
        {position, MeasurementKind::UnambiguousDiscrimination, to_string(outcome)});
    switch (outcome) {
      case UsdOutcome::ConclusiveDefault:
        if (position <= below || position >= above)
          throw std::logic_error("conclusive outcome contradicts the window bounds");
        below = position;
        window.erase(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(mid_index) + 1);
        break;
      case UsdOutcome::ConclusiveMutation:
        if (position <= below || position >= above)
          throw std::logic_error("conclusive outcome contradicts the window bounds");
        above = position;
        window.erase(window.begin() + static_cast<std::ptrdiff_t>(mid_index), window.end());
        break;
      case UsdOutcome::Inconclusive:
        window.erase(window.begin() + static_cast<std::ptrdiff_t>(mid_index));
        break;
    }
  }

  result.consumed = static_cast<int>(result.transcript.size());
  const StateLabel def = StateLabel::default_state();
  const StateLabel mut = StateLabel::mutation(seq.mutation());
  for (int p = 1; p <= n; ++p) {
    if (measured[static_cast<std::size_t>(p)]) continue;
    if (p <= below) {
      result.distilled_pairs.emplace_back(p, def);
      ++result.distilled_default;
    } else if (p > above) {
      result.distilled_pairs.emplace_back(p, mut);
      ++result.distilled_mutation;
    } else {
      // Unreachable: the loop above only stops once no unmeasured position is
      // left strictly between the bounds. Kept as accounting of last resort.
      result.residual_positions.push_back(p);
      ++result.residual_unknown;
    }
  }

  const bool any_conclusive = below > 0 || above <= n;
  if (below + 1 == above) {
    if (above == n + 1) {
      result.reported_change_point = ChangePointReport::no_change(n);
      result.status = TerminalStatus::NoChangeConfirmed;
    } else {
      result.reported_change_point = ChangePointReport::exact(above);
      result.status = TerminalStatus::Identified;
    }
  } else if (!any_conclusive) {
    result.reported_change_point = ChangePointReport::interval(1, n + 1);
    result.status = TerminalStatus::Unresolved;
  } else {
    result.reported_change_point = ChangePointReport::interval(below + 1, above);
    result.status = TerminalStatus::Identified;
  }
  return result;
}

}  // namespace qcp
