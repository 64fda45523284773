#include "qcp/orthogonal.hpp"

#include <bit>

#include "qcp/measurement.hpp"

namespace qcp {

int worst_case_measurements(int n) {
  if (n < 1) throw std::invalid_argument("sequence length must be >= 1");
  return static_cast<int>(std::bit_width(static_cast<unsigned int>(n)));
}

int best_case_measurements(int n) {
  if (n < 1) throw std::invalid_argument("sequence length must be >= 1");
  return static_cast<int>(std::bit_width(static_cast<unsigned int>(n) + 1U)) - 1;
}

ProtocolResult run_orthogonal(const SequenceInstance& seq) {
  const int n = seq.n();
  const StateLabel def = StateLabel::default_state();
  const StateLabel mut = StateLabel::mutation(seq.mutation());

  ProtocolResult result;
  std::vector<char> measured(static_cast<std::size_t>(n) + 1, 0);
  Window window{1, n};
  int earliest_mutated = n + 1;
  while (!window.empty()) {
    const int mid = window.midpoint();
    const StateLabel outcome = discriminate_orthogonal(seq.label(mid), def, mut);
    result.transcript.push_back(
        {mid, MeasurementKind::OrthogonalDiscrimination, outcome.to_string()});
    measured[static_cast<std::size_t>(mid)] = 1;
    if (outcome.is_default()) {
      window.lo = mid + 1;
    } else {
      earliest_mutated = mid;
      window.hi = mid - 1;
    }
  }

  const int k = earliest_mutated;
  result.consumed = static_cast<int>(result.transcript.size());
  result.distilled_pairs.reserve(static_cast<std::size_t>(n - result.consumed));
  for (int p = 1; p <= n; ++p) {
    if (measured[static_cast<std::size_t>(p)]) continue;
    const StateLabel label = p < k ? def : mut;
    result.distilled_pairs.emplace_back(p, label);
    if (label.is_default())
      ++result.distilled_default;
    else
      ++result.distilled_mutation;
  }
  if (k == n + 1) {
    result.reported_change_point = ChangePointReport::no_change(n);
    result.status = TerminalStatus::NoChangeConfirmed;
  } else {
    result.reported_change_point = ChangePointReport::exact(k);
    result.status = TerminalStatus::Identified;
  }
  return result;
}

}  // namespace qcp
