#pragma once

#include <vector>

#include "qcp/measurement.hpp"
#include "qcp/model.hpp"
#include "qcp/result.hpp"
#include "qcp/rng.hpp"

namespace qcp {

/// Per-window-length ingredients of the expected-consumption recursion.
/// For a window of length m the next measurement ends in exactly one of:
///   conclusive_default  -> the right part of the window survives, floor((m-1)/2) pairs
///   conclusive_mutation -> the left part survives, floor(m/2) pairs
///   fail                -> the measured pair is discarded, m-1 pairs survive
struct RecursionEntry {
  double conclusive_default = 0.0;
  double conclusive_mutation = 0.0;
  double fail = 0.0;
  double expected_consumed = 0.0;
};

struct RecursionTable {
  double overlap = 0.0;
  PriorsVariant variant = PriorsVariant::FloorHalf;
  std::vector<RecursionEntry> entries;  // indexed by window length m, entry 0 is the base case

  const RecursionEntry& at(int m) const { return entries.at(static_cast<std::size_t>(m)); }
};

/// Bottom-up evaluation of
///   N(m) = 1 + fail(m) * N(m-1)
///            + conclusive_default(m) * N(floor((m-1)/2))
///            + conclusive_mutation(m) * N(floor(m/2)),   N(0) = 0,
/// with the branch weights built from the window priors and the unambiguous
/// failure probabilities at the given overlap. The degenerate overlaps are
/// exact special cases: s = 0 makes every measurement conclusive, s = 1 makes
/// every measurement fail.
RecursionTable build_recursion_table(int n, double overlap,
                                     PriorsVariant variant = PriorsVariant::FloorHalf);

/// N(n) from the recursion above.
double expected_consumed(int n, double overlap,
                         PriorsVariant variant = PriorsVariant::FloorHalf);

/// n - N(n): pairs the recursion predicts will survive distillation.
double average_distilled(int n, double overlap,
                         PriorsVariant variant = PriorsVariant::FloorHalf);

/// Binary search driven by unambiguous discrimination. Conclusive outcomes
/// halve the window exactly as in the orthogonal protocol; inconclusive
/// outcomes discard the measured pair and shrink the window by one, leaving a
/// gap. The midpoint is always the floor(m/2)+1-th survivor. Terminates when
/// no candidate pair is left; discarded gaps can make the final answer an
/// interval instead of an exact position.
///
/// overlap 0 behaves exactly like run_orthogonal; overlap 1 is the
/// degenerate all-fail path that consumes everything and resolves nothing.
ProtocolResult run_unambiguous(const SequenceInstance& seq, double overlap,
                               RandomStream& rng,
                               PriorsVariant variant = PriorsVariant::FloorHalf);

}  // namespace qcp
