#include "qcp/bell.hpp"

#include "qcp/measurement.hpp"
#include "qcp/orthogonal.hpp"

namespace qcp {

namespace {

struct BellRun {
  const SequenceInstance& seq;
  RandomStream& rng;
  BellProtocolResult out;
  std::vector<char> measured;
  std::vector<char> distilled;

  BellRun(const SequenceInstance& s, RandomStream& r)
      : seq(s), rng(r),
        measured(static_cast<std::size_t>(s.n()) + 1, 0),
        distilled(static_cast<std::size_t>(s.n()) + 1, 0) {}

  BellBasisOutcome measure_computational(int position) {
    const BellBasisOutcome outcome = bell_computational_measure(seq.label(position), rng);
    measured[static_cast<std::size_t>(position)] = 1;
    out.transcript.push_back(
        {position, MeasurementKind::BellComputationalBasis, outcome.to_string()});
    return outcome;
  }

  StateLabel discriminate(int position, StateLabel a, StateLabel b) {
    const StateLabel outcome = discriminate_orthogonal(seq.label(position), a, b);
    measured[static_cast<std::size_t>(position)] = 1;
    out.transcript.push_back(
        {position, MeasurementKind::OrthogonalDiscrimination, outcome.to_string()});
    return outcome;
  }

  void distill_range(int lo, int hi, StateLabel label) {
    for (int p = lo; p <= hi; ++p) {
      if (measured[static_cast<std::size_t>(p)] || distilled[static_cast<std::size_t>(p)])
        throw std::logic_error("pair distilled twice or after consumption");
      distilled[static_cast<std::size_t>(p)] = 1;
      out.distilled_pairs.emplace_back(p, label);
      if (label.is_default())
        ++out.distilled_default;
      else
        ++out.distilled_mutation;
    }
  }

  /// Two-state search for the first pair carrying the given mutation inside
  /// [lo, hi]; the caller has established the change lies in [lo, hi+1].
  /// Merges the sub-search's measurements and distilled pairs and returns the
  /// located global change position.
  int locate_change_in_prefix(int lo, int hi, int mutation_index) {
    if (hi < lo) return lo;  // empty prefix: a single candidate remains
    const ProtocolResult sub = run_orthogonal(subsequence(seq, lo, hi, mutation_index));
    const int offset = lo - 1;
    for (const MeasurementRecord& record : sub.transcript) {
      measured[static_cast<std::size_t>(record.position + offset)] = 1;
      out.transcript.push_back(
          {record.position + offset, record.kind, record.outcome, record.pairs_consumed});
    }
    for (const auto& [position, label] : sub.distilled_pairs) {
      distilled[static_cast<std::size_t>(position + offset)] = 1;
      out.distilled_pairs.emplace_back(position + offset, label);
      if (label.is_default())
        ++out.distilled_default;
      else
        ++out.distilled_mutation;
    }
    return offset + sub.reported_change_point.exact_value();
  }

  void finalize() {
    const int n = seq.n();
    out.consumed = static_cast<int>(out.transcript.size());
    for (int p = 1; p <= n; ++p) {
      if (!measured[static_cast<std::size_t>(p)] && !distilled[static_cast<std::size_t>(p)]) {
        out.residual_positions.push_back(p);
        ++out.residual_unknown;
      }
    }
    if (out.consumed + out.distilled_total() + out.residual_unknown != n)
      throw std::logic_error("pair accounting does not cover the sequence");
  }
};

}  // namespace

BellProtocolResult run_bell(const SequenceInstance& seq, RandomStream& rng) {
  if (seq.mutation() > 3)
    throw std::invalid_argument("sequence labels lie outside the Bell alphabet");
  const int n = seq.n();
  const StateLabel def = StateLabel::default_state();

  BellRun run(seq, rng);
  int lo = 1;
  // While true, the hypothesis "change at lo-1 with mutation 1" is still open:
  // the pair at lo-1 was measured in the computational basis, which cannot
  // tell the default state from mutation 1.
  bool alias = false;

  while (true) {
    if (lo > n) {
      // Window exhausted with every observation consistent with no change.
      run.out.status = TerminalStatus::NoChangeUnresolved;
      run.out.reported_change_point = ChangePointReport::interval(lo - 1, n + 1);
      break;
    }
    const int m = n - lo + 1;
    const int mid = lo + m / 2;
    const BellBasisOutcome parity = run.measure_computational(mid);

    if (parity.parity_equal()) {
      run.out.branch_trace.push_back(BranchTag::A1);
      if (mid == lo) {
        // Last pair of the sequence, no usable neighbour: default and
        // mutation 1 stay indistinguishable here.
        run.out.status = TerminalStatus::NoChangeUnresolved;
        run.out.reported_change_point = ChangePointReport::interval(alias ? lo - 1 : lo, n + 1);
        break;
      }
      const StateLabel outcome = run.discriminate(mid - 1, def, StateLabel::mutation(1));
      if (outcome.is_default()) {
        run.out.branch_trace.push_back(BranchTag::A1_1);
        run.distill_range(lo, mid - 2, def);
        lo = mid + 1;
        alias = true;
        continue;
      }
      run.out.branch_trace.push_back(BranchTag::A1_2);
      run.out.reported_mutation = 1;
      run.distill_range(mid + 1, n, StateLabel::mutation(1));
      const int located = run.locate_change_in_prefix(lo, mid - 2, 1);
      if (located == lo && alias) {
        // The whole prefix is mutated, and the change could equally sit one
        // position earlier, on the pair the previous round consumed.
        run.out.status = TerminalStatus::DistilledOnly;
        run.out.reported_change_point = ChangePointReport::interval(lo - 1, lo);
      } else {
        run.out.status = TerminalStatus::Identified;
        run.out.reported_change_point = ChangePointReport::exact(located);
      }
      break;
    }

    run.out.branch_trace.push_back(BranchTag::A2);
    // Unequal bits: the change already happened and the mutation is 2 or 3,
    // which also rules out the alias hypothesis (that needs mutation 1).
    if (mid == n) {
      run.out.status = TerminalStatus::DistilledOnly;
      if (lo == mid) {
        run.out.reported_change_point = ChangePointReport::exact(mid);
      } else {
        run.out.reported_change_point = ChangePointReport::interval(lo, mid);
      }
      break;
    }
    const StateLabel successor =
        run.discriminate(mid + 1, StateLabel::mutation(2), StateLabel::mutation(3));
    const int mutation_index = successor.mutation_index();
    run.out.reported_mutation = mutation_index;
    run.distill_range(mid + 2, n, successor);
    const int located = run.locate_change_in_prefix(lo, mid - 1, mutation_index);
    run.out.status = TerminalStatus::Identified;
    run.out.reported_change_point = ChangePointReport::exact(located);
    break;
  }

  run.finalize();
  return run.out;
}

}  // namespace qcp
