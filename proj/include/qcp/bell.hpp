#pragma once

#include "qcp/model.hpp"
#include "qcp/result.hpp"
#include "qcp/rng.hpp"

namespace qcp {

/// Change-point search over a four-state alphabet (default plus mutations
/// 1..3) using only local measurements. One round on the window [lo, n]:
///
///   measure the midpoint pair in the computational basis;
///   equal bits (branch a1): the midpoint is default or mutation 1, and so is
///     its predecessor; discriminate the predecessor between those two.
///     Default outcome (a1.1): everything before the predecessor is default
///       and is distilled; restart on the pairs right of the midpoint.
///     Mutation-1 outcome (a1.2): the mutation is 1, every pair after the
///       midpoint is mutated and is distilled; locate the change inside the
///       remaining prefix with the two-state search.
///   unequal bits (branch a2): the change already happened and the mutation
///     is 2 or 3; the successor pair is mutated too, so discriminating it
///     names the mutation exactly; distill everything after it and locate the
///     change inside the prefix with the two-state search.
///
/// Small windows at the end of the sequence lack the needed neighbour; those
/// rounds terminate with interval or unresolved reports. A sequence that never
/// shows mutation evidence ends NoChangeUnresolved: a change to mutation 1 at
/// the very last pair is indistinguishable from no change at all.
BellProtocolResult run_bell(const SequenceInstance& seq, RandomStream& rng);

}  // namespace qcp
