#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qcp/rng.hpp"

namespace qcp {

/// Identity of one emitted entangled pair: either the source's default state
/// or one of its mutations (1-based index).
class StateLabel {
 public:
  constexpr StateLabel() = default;

  static constexpr StateLabel default_state() { return StateLabel{0}; }

  static StateLabel mutation(int index) {
    if (index < 1) throw std::invalid_argument("mutation index must be >= 1");
    return StateLabel{index};
  }

  constexpr bool is_default() const { return code_ == 0; }
  constexpr bool is_mutation() const { return code_ != 0; }

  int mutation_index() const {
    if (code_ == 0) throw std::logic_error("default state has no mutation index");
    return code_;
  }

  std::string to_string() const {
    return code_ == 0 ? "D" : "M" + std::to_string(code_);
  }

  friend constexpr bool operator==(StateLabel, StateLabel) = default;

 private:
  explicit constexpr StateLabel(int code) : code_(code) {}
  int code_ = 0;
};

enum class Regime { Orthogonal, Nonorthogonal, BellSet };

/// Static description of the source: how many pairs it emits, how many
/// mutations it can switch to, and the overlap between the default state and
/// the mutation (meaningful only for a single non-orthogonal mutation).
struct SourceModel {
  int n = 1;
  int mutation_count = 1;
  double overlap = 0.0;
  Regime regime = Regime::Orthogonal;

  SourceModel(int n_, Regime regime_, double overlap_ = 0.0, int mutation_count_ = 1)
      : n(n_), mutation_count(mutation_count_), overlap(overlap_), regime(regime_) {
    if (n < 1) throw std::invalid_argument("sequence length must be >= 1");
    if (mutation_count < 1) throw std::invalid_argument("mutation count must be >= 1");
    switch (regime) {
      case Regime::Orthogonal:
        if (overlap != 0.0) throw std::invalid_argument("orthogonal regime requires overlap 0");
        if (mutation_count != 1) throw std::invalid_argument("orthogonal regime has one mutation");
        break;
      case Regime::Nonorthogonal:
        if (!(overlap > 0.0 && overlap < 1.0))
          throw std::invalid_argument("nonorthogonal regime requires 0 < overlap < 1");
        if (mutation_count != 1)
          throw std::invalid_argument("nonorthogonal regime has one mutation");
        break;
      case Regime::BellSet:
        if (overlap != 0.0) throw std::invalid_argument("Bell regime requires overlap 0");
        if (mutation_count != 3) throw std::invalid_argument("Bell regime has three mutations");
        break;
    }
  }

  static SourceModel orthogonal(int n) { return SourceModel(n, Regime::Orthogonal); }
  static SourceModel nonorthogonal(int n, double s) {
    return SourceModel(n, Regime::Nonorthogonal, s);
  }
  static SourceModel bell(int n) { return SourceModel(n, Regime::BellSet, 0.0, 3); }
};

/// Hidden change position. k in [1, n+1]; k = n+1 means the source never
/// switched and the whole sequence is in the default state.
struct ChangePoint {
  int k = 1;
};

/// One concrete emitted sequence: labels plus the hidden truth that produced
/// them. Immutable after construction. Positions are 1-based throughout.
class SequenceInstance {
 public:
  SequenceInstance(std::vector<StateLabel> labels, int change_point, int mutation);

  /// Derives (change point, mutation) from the labels; throws if the labels
  /// are not a default-prefix followed by a uniform mutated suffix.
  /// fallback_mutation names the mutation when the sequence is all-default.
  static SequenceInstance from_labels(std::vector<StateLabel> labels,
                                      int fallback_mutation = 1);

  int n() const { return static_cast<int>(labels_.size()); }
  StateLabel label(int position) const {
    if (position < 1 || position > n()) throw std::invalid_argument("position out of range");
    return labels_[static_cast<std::size_t>(position - 1)];
  }
  int change_point() const { return change_point_; }
  int mutation() const { return mutation_; }
  bool no_change() const { return change_point_ == n() + 1; }
  const std::vector<StateLabel>& labels() const { return labels_; }

 private:
  std::vector<StateLabel> labels_;
  int change_point_;
  int mutation_;
};

/// Uniform draw of the change position over [1, n+1].
ChangePoint draw_change_point(int n, RandomStream& rng);

/// Deterministic sequence construction: positions before cp.k carry the
/// default state, positions at and after it carry the given mutation.
SequenceInstance sample_sequence(const SourceModel& source, ChangePoint cp, int mutation);

/// Same construction without a SourceModel, for callers that only know the
/// shape (used by sub-searches and by the degenerate-overlap harness path).
SequenceInstance sample_sequence(int n, int mutation_count, ChangePoint cp, int mutation);

/// Contiguous slice [lo, hi] of a sequence, re-indexed from 1. The slice of a
/// valid sequence is itself a valid sequence.
SequenceInstance subsequence(const SequenceInstance& seq, int lo, int hi,
                             int fallback_mutation = 1);

}  // namespace qcp
