#include "doctest.h"

#include <algorithm>

#include "qcp/model.hpp"
#include "qcp/orthogonal.hpp"

using namespace qcp;

namespace {

SequenceInstance make_seq(int n, int k) { return sample_sequence(n, 1, ChangePoint{k}, 1); }

void check_run(const SequenceInstance& seq, const ProtocolResult& result) {
  const int n = seq.n();
  const int k = seq.change_point();

  // The search is exact: the true change point is always pinned down.
  if (k == n + 1) {
    REQUIRE(result.status == TerminalStatus::NoChangeConfirmed);
    REQUIRE(result.reported_change_point.kind() == ChangePointReport::Kind::NoChange);
  } else {
    REQUIRE(result.status == TerminalStatus::Identified);
    REQUIRE(result.reported_change_point.exact_value() == k);
  }

  // Every pair is either consumed or distilled, and distilled labels are true.
  REQUIRE(result.consumed + result.distilled_total() == n);
  REQUIRE(result.residual_unknown == 0);
  REQUIRE(static_cast<int>(result.distilled_pairs.size()) == result.distilled_total());
  for (const auto& [position, label] : result.distilled_pairs)
    REQUIRE(label == seq.label(position));

  // Consumption never leaves the two-value envelope.
  const int consumed = result.consumed;
  REQUIRE((consumed == best_case_measurements(n) || consumed == worst_case_measurements(n)));
}

}  // namespace

TEST_CASE("measurement-count closed forms at anchor sizes") {
  CHECK(worst_case_measurements(1) == 1);
  CHECK(best_case_measurements(1) == 1);
  CHECK(worst_case_measurements(2) == 2);
  CHECK(best_case_measurements(2) == 1);
  CHECK(worst_case_measurements(3) == 2);
  CHECK(best_case_measurements(3) == 2);
  CHECK(worst_case_measurements(16) == 5);
  CHECK(best_case_measurements(16) == 4);
  CHECK(worst_case_measurements(1 << 20) == 21);
  CHECK(best_case_measurements(1 << 20) == 20);
  CHECK(worst_case_measurements((1 << 20) - 1) == 20);
  CHECK(best_case_measurements((1 << 20) - 1) == 20);
  CHECK_THROWS_AS(worst_case_measurements(0), std::invalid_argument);
  CHECK_THROWS_AS(best_case_measurements(0), std::invalid_argument);
}

TEST_CASE("single-pair sequences resolve with one measurement") {
  const ProtocolResult changed = run_orthogonal(make_seq(1, 1));
  CHECK(changed.consumed == 1);
  CHECK(changed.status == TerminalStatus::Identified);
  CHECK(changed.reported_change_point.exact_value() == 1);

  const ProtocolResult unchanged = run_orthogonal(make_seq(1, 2));
  CHECK(unchanged.consumed == 1);
  CHECK(unchanged.status == TerminalStatus::NoChangeConfirmed);
  CHECK(unchanged.reported_change_point.covers(2));
}

TEST_CASE("exhaustive sweep up to n = 256: exactness, envelope, conservation, purity") {
  for (int n = 1; n <= 256; ++n) {
    int min_consumed = n + 1;
    int max_consumed = 0;
    for (int k = 1; k <= n + 1; ++k) {
      const SequenceInstance seq = make_seq(n, k);
      const ProtocolResult result = run_orthogonal(seq);
      check_run(seq, result);
      min_consumed = std::min(min_consumed, result.consumed);
      max_consumed = std::max(max_consumed, result.consumed);
    }
    // Both ends of the envelope are hit by some hypothesis.
    REQUIRE(min_consumed == best_case_measurements(n));
    REQUIRE(max_consumed == worst_case_measurements(n));
  }
}

TEST_CASE("transcript replay: every measurement sits at the live window midpoint") {
  for (int n = 1; n <= 64; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      const ProtocolResult result = run_orthogonal(make_seq(n, k));
      Window window{1, n};
      for (const MeasurementRecord& record : result.transcript) {
        REQUIRE_FALSE(window.empty());
        const int m = window.length();
        REQUIRE(record.position == window.midpoint());
        REQUIRE(record.kind == MeasurementKind::OrthogonalDiscrimination);
        REQUIRE(record.pairs_consumed == 1);
        if (record.outcome == "D")
          window.lo = record.position + 1;
        else
          window.hi = record.position - 1;
        // Halving property: the window length drops to floor(m/2) or
        // floor((m-1)/2) depending on the side that survives.
        REQUIRE((window.length() == m / 2 || window.length() == (m - 1) / 2));
      }
      REQUIRE(window.empty());
    }
  }
}

TEST_CASE("spot checks at larger sizes") {
  for (int n : {2048, 4095, 4096}) {
    for (int k : {1, 2, n / 2, n, n + 1}) {
      const SequenceInstance seq = make_seq(n, k);
      check_run(seq, run_orthogonal(seq));
    }
  }
}
