#include "qcp/measurement.hpp"

#include <cmath>

namespace qcp {

namespace {

void validate_priors(const PriorPair& priors) {
  if (!(priors.p_default >= 0.0 && priors.p_default <= 1.0) ||
      !(priors.p_mutation >= 0.0 && priors.p_mutation <= 1.0))
    throw std::invalid_argument("priors must lie in [0, 1]");
  if (std::abs(priors.p_default + priors.p_mutation - 1.0) > 1e-12)
    throw std::invalid_argument("priors must sum to 1");
}

}  // namespace

PriorPair priors_for_window(int m, PriorsVariant variant) {
  if (m < 1) throw std::invalid_argument("window length must be >= 1");
  const int numerator = variant == PriorsVariant::FloorHalf ? (m + 1) / 2 : m / 2 + 1;
  const double p_mutation = static_cast<double>(numerator) / static_cast<double>(m + 1);
  return PriorPair{1.0 - p_mutation, p_mutation};
}

UsdFailureProbs usd_failure_probs(const PriorPair& priors, double overlap) {
  validate_priors(priors);
  if (!(overlap >= 0.0 && overlap <= 1.0))
    throw std::invalid_argument("overlap must lie in [0, 1]");
  const double pd = priors.p_default;
  const double pm = priors.p_mutation;
  const double s2 = overlap * overlap;
  if (pm <= pd * s2) return {s2, 1.0};
  if (pd <= pm * s2) return {1.0, s2};
  const double ratio = std::sqrt(pm / pd);
  return {overlap * ratio, overlap / ratio};
}

std::string to_string(UsdOutcome outcome) {
  switch (outcome) {
    case UsdOutcome::ConclusiveDefault: return "conclusive_default";
    case UsdOutcome::ConclusiveMutation: return "conclusive_mutation";
    case UsdOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

UsdOutcome usd_measure(StateLabel true_label, const PriorPair& priors, double overlap,
                       RandomStream& rng) {
  if (!(overlap > 0.0 && overlap < 1.0))
    throw std::invalid_argument("usd_measure requires 0 < overlap < 1");
  const UsdFailureProbs fail = usd_failure_probs(priors, overlap);
  const double u = rng.next_unit();
  if (true_label.is_default())
    return u < fail.fail_given_default ? UsdOutcome::Inconclusive
                                       : UsdOutcome::ConclusiveDefault;
  return u < fail.fail_given_mutation ? UsdOutcome::Inconclusive
                                      : UsdOutcome::ConclusiveMutation;
}

BellBasisOutcome bell_computational_measure(StateLabel true_label, RandomStream& rng) {
  if (true_label.is_mutation() && true_label.mutation_index() > 3)
    throw std::invalid_argument("label outside the Bell alphabet");
  const bool equal_bits = true_label.is_default() || true_label.mutation_index() == 1;
  const bool flip = rng.next_unit() < 0.5;
  if (equal_bits) return flip ? BellBasisOutcome{1, 1} : BellBasisOutcome{0, 0};
  return flip ? BellBasisOutcome{1, 0} : BellBasisOutcome{0, 1};
}

StateLabel discriminate_orthogonal(StateLabel true_label, StateLabel hypothesis_a,
                                   StateLabel hypothesis_b) {
  if (hypothesis_a == hypothesis_b)
    throw std::invalid_argument("hypotheses must be distinct");
  if (true_label != hypothesis_a && true_label != hypothesis_b)
    throw std::logic_error("true label is not among the discrimination hypotheses");
  return true_label;
}

}  // namespace qcp
