#pragma once

#include "qcp/model.hpp"
#include "qcp/result.hpp"

namespace qcp {

/// Live search window over global positions, inclusive on both ends.
/// Invariant: 1 <= lo <= hi+1 <= n+1; lo = hi+1 encodes the empty window.
struct Window {
  int lo = 1;
  int hi = 0;

  int length() const { return hi - lo + 1; }
  bool empty() const { return lo > hi; }
  /// Position measured next: local index floor(m/2)+1 within the window.
  int midpoint() const { return lo + length() / 2; }
};

/// Largest number of pairs the binary search can consume: floor(log2 n) + 1.
int worst_case_measurements(int n);

/// Smallest number of pairs the binary search can consume: floor(log2 (n+1)).
int best_case_measurements(int n);

/// Binary-search change-point detection for a perfectly distinguishable
/// mutation. Measures the window midpoint; a default outcome moves the window
/// right of it, a mutated outcome moves it left and lowers the earliest
/// mutated position seen. Terminates with the change point known exactly, so
/// every unmeasured pair is distilled with a definite label.
ProtocolResult run_orthogonal(const SequenceInstance& seq);

}  // namespace qcp
