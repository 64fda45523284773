#pragma once

#include <stdexcept>
#include <string>

#include "qcp/model.hpp"
#include "qcp/rng.hpp"

namespace qcp {

/// How the agent assigns prior weights to the two hypotheses ("midpoint pair
/// is still default" vs "midpoint pair is already mutated") for a live window
/// of length m.
///
/// FloorHalf:     p_mutation = floor((m+1)/2) / (m+1)   (the default choice)
/// MidpointCount: p_mutation = (floor(m/2)+1) / (m+1)   (count of hypotheses
///                k <= midpoint when the midpoint sits at floor(m/2)+1)
///
/// The two agree for odd m and differ by one hypothesis for even m; the
/// second is exposed for sensitivity analysis.
enum class PriorsVariant { FloorHalf, MidpointCount };

struct PriorPair {
  double p_default = 0.5;
  double p_mutation = 0.5;
};

PriorPair priors_for_window(int m, PriorsVariant variant = PriorsVariant::FloorHalf);

/// Failure (inconclusive) probabilities of the optimal unambiguous
/// discrimination of two pure states with the given priors and overlap s.
///
/// Interior regime, s <= sqrt(p_mutation/p_default) <= 1/s:
///   fail_given_default  = s * sqrt(p_mutation/p_default)
///   fail_given_mutation = s * sqrt(p_default/p_mutation)
///   aggregate           = 2 * sqrt(p_default * p_mutation) * s
/// Otherwise the unlikely state is never identified (its failure probability
/// is 1) and the likely state fails with probability s^2.
struct UsdFailureProbs {
  double fail_given_default = 0.0;
  double fail_given_mutation = 0.0;

  double aggregate(const PriorPair& priors) const {
    return priors.p_default * fail_given_default + priors.p_mutation * fail_given_mutation;
  }
};

UsdFailureProbs usd_failure_probs(const PriorPair& priors, double overlap);

enum class UsdOutcome { ConclusiveDefault, ConclusiveMutation, Inconclusive };

std::string to_string(UsdOutcome outcome);

/// One unambiguous measurement of a pair whose true label is known to the
/// simulator. Conclusive outcomes never misreport the state; the single
/// uniform draw is mapped through the inverse CDF so a trial's transcript is
/// a pure function of its stream. Requires 0 < overlap < 1 (the degenerate
/// overlaps have dedicated protocol paths).
UsdOutcome usd_measure(StateLabel true_label, const PriorPair& priors, double overlap,
                       RandomStream& rng);

/// Local computational-basis measurement of one pair drawn from the Bell
/// alphabet. Outcomes with equal bits come from the default state or
/// mutation 1; outcomes with unequal bits come from mutations 2 and 3. Each
/// compatible bit pair occurs with probability 1/2.
struct BellBasisOutcome {
  int a = 0;
  int b = 0;
  bool parity_equal() const { return a == b; }
  std::string to_string() const { return std::to_string(a) + std::to_string(b); }
};

BellBasisOutcome bell_computational_measure(StateLabel true_label, RandomStream& rng);

/// Deterministic discrimination of two orthogonal hypotheses. The pair is
/// consumed and its label is revealed. Throws std::logic_error if the true
/// label is not among the hypotheses: that means the calling protocol's
/// deduction chain is broken.
StateLabel discriminate_orthogonal(StateLabel true_label, StateLabel hypothesis_a,
                                   StateLabel hypothesis_b);

}  // namespace qcp
