#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcp/model.hpp"

namespace qcp {

enum class MeasurementKind {
  OrthogonalDiscrimination,
  UnambiguousDiscrimination,
  BellComputationalBasis,
};

std::string to_string(MeasurementKind kind);

/// One LOCC measurement: the global 1-based position of the pair it consumed,
/// what kind of measurement it was, and the observed outcome. Every
/// measurement consumes exactly one pair.
struct MeasurementRecord {
  int position = 0;
  MeasurementKind kind = MeasurementKind::OrthogonalDiscrimination;
  std::string outcome;
  int pairs_consumed = 1;
};

enum class TerminalStatus {
  Identified,         // conclusive evidence localized the change point: exact, or an
                      // interval when discarded pairs straddle the boundary
  NoChangeConfirmed,  // k = n+1 established exactly
  Unresolved,         // nothing conclusive was ever observed
  DistilledOnly,      // pairs were freed but change point and/or mutation stay open
  NoChangeUnresolved, // every observation is consistent with "no change"
};

std::string to_string(TerminalStatus status);

/// What the protocol asserts about the change position when it stops. An
/// interval's upper endpoint may be n+1, meaning "possibly no change at all".
class ChangePointReport {
 public:
  enum class Kind { Exact, Interval, NoChange };

  static ChangePointReport exact(int k) { return {Kind::Exact, k, k}; }
  static ChangePointReport interval(int lo, int hi) {
    if (lo >= hi) throw std::invalid_argument("interval needs at least two candidates");
    return {Kind::Interval, lo, hi};
  }
  static ChangePointReport no_change(int n) { return {Kind::NoChange, n + 1, n + 1}; }

  Kind kind() const { return kind_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int exact_value() const {
    if (kind_ == Kind::Interval) throw std::logic_error("report is not exact");
    return lo_;
  }
  /// True if hypothesis k (with k = n+1 meaning no change) is compatible.
  bool covers(int k) const { return lo_ <= k && k <= hi_; }

  friend bool operator==(const ChangePointReport&, const ChangePointReport&) = default;

 private:
  ChangePointReport(Kind kind, int lo, int hi) : kind_(kind), lo_(lo), hi_(hi) {}
  Kind kind_;
  int lo_;
  int hi_;
};

/// Outcome of one protocol run. Every pair is accounted for exactly once:
/// consumed by a measurement, distilled with a definite label, or left with
/// an undetermined label (residual).
struct ProtocolResult {
  ChangePointReport reported_change_point = ChangePointReport::exact(1);
  TerminalStatus status = TerminalStatus::Unresolved;
  int consumed = 0;
  int distilled_default = 0;
  int distilled_mutation = 0;
  int residual_unknown = 0;
  std::vector<std::pair<int, StateLabel>> distilled_pairs;  // (position, label)
  std::vector<int> residual_positions;
  std::vector<MeasurementRecord> transcript;

  int distilled_total() const { return distilled_default + distilled_mutation; }
};

enum class BranchTag { A1, A1_1, A1_2, A2 };

std::string to_string(BranchTag tag);

struct BellProtocolResult : ProtocolResult {
  /// Mutation identity when the protocol pinned it down; empty otherwise.
  std::optional<int> reported_mutation;
  std::vector<BranchTag> branch_trace;
};

}  // namespace qcp
