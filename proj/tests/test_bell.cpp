#include "doctest.h"

#include <algorithm>
#include <vector>

#include "qcp/bell.hpp"
#include "qcp/orthogonal.hpp"
#include "qcp/rng.hpp"

using namespace qcp;

namespace {

SequenceInstance bell_seq(int n, int k, int mutation) {
  return sample_sequence(SourceModel::bell(n), ChangePoint{k}, mutation);
}

std::vector<int> transcript_positions(const ProtocolResult& result) {
  std::vector<int> positions;
  for (const MeasurementRecord& record : result.transcript)
    positions.push_back(record.position);
  return positions;
}

}  // namespace

TEST_CASE("worked example: change at 3 to mutation 1") {
  SeededStream rng(1);
  const BellProtocolResult r = run_bell(bell_seq(16, 3, 1), rng);
  CHECK(r.branch_trace == std::vector<BranchTag>{BranchTag::A1, BranchTag::A1_2});
  CHECK(r.status == TerminalStatus::Identified);
  CHECK(r.reported_change_point == ChangePointReport::exact(3));
  CHECK(r.reported_mutation == 1);
  CHECK(r.consumed == 5);
  CHECK(r.distilled_default == 1);
  CHECK(r.distilled_mutation == 10);
  CHECK(r.residual_unknown == 0);
  // Midpoint 9 in the computational basis, its predecessor 8 discriminated,
  // then the two-state search over the prefix [1, 7].
  CHECK(transcript_positions(r) == std::vector<int>{9, 8, 4, 2, 3});
  CHECK(r.transcript[0].kind == MeasurementKind::BellComputationalBasis);
  CHECK(r.transcript[1].kind == MeasurementKind::OrthogonalDiscrimination);
}

TEST_CASE("worked example: change at 3 to mutation 2") {
  SeededStream rng(1);
  const BellProtocolResult r = run_bell(bell_seq(16, 3, 2), rng);
  CHECK(r.branch_trace == std::vector<BranchTag>{BranchTag::A2});
  CHECK(r.status == TerminalStatus::Identified);
  CHECK(r.reported_change_point == ChangePointReport::exact(3));
  CHECK(r.reported_mutation == 2);
  CHECK(r.consumed == 5);
  CHECK(r.distilled_default == 1);
  CHECK(r.distilled_mutation == 10);
  // Midpoint 9, its successor 10 discriminated, then the prefix [1, 8].
  CHECK(transcript_positions(r) == std::vector<int>{9, 10, 5, 3, 2});
}

TEST_CASE("worked example: unchanged source cascades to the right and stays open") {
  SeededStream rng(1);
  const BellProtocolResult r = run_bell(bell_seq(16, 17, 1), rng);
  CHECK(r.branch_trace ==
        std::vector<BranchTag>{BranchTag::A1, BranchTag::A1_1, BranchTag::A1,
                               BranchTag::A1_1, BranchTag::A1, BranchTag::A1_1,
                               BranchTag::A1});
  CHECK(r.status == TerminalStatus::NoChangeUnresolved);
  // Pair 15 was consumed with an outcome that mutation 1 could also produce,
  // so the report cannot exclude a change at the very end.
  CHECK(r.reported_change_point == ChangePointReport::interval(15, 17));
  CHECK_FALSE(r.reported_mutation.has_value());
  CHECK(r.consumed == 7);
  CHECK(r.distilled_default == 9);
  CHECK(r.distilled_mutation == 0);
  CHECK(r.residual_unknown == 0);
  CHECK(transcript_positions(r) == std::vector<int>{9, 8, 13, 12, 15, 14, 16});
}

TEST_CASE("smallest sequences") {
  SeededStream rng(5);

  const BellProtocolResult one_mut3 = run_bell(bell_seq(1, 1, 3), rng);
  CHECK(one_mut3.status == TerminalStatus::DistilledOnly);
  CHECK(one_mut3.reported_change_point == ChangePointReport::exact(1));
  CHECK_FALSE(one_mut3.reported_mutation.has_value());
  CHECK(one_mut3.consumed == 1);

  const BellProtocolResult one_clean = run_bell(bell_seq(1, 2, 1), rng);
  CHECK(one_clean.status == TerminalStatus::NoChangeUnresolved);
  CHECK(one_clean.reported_change_point == ChangePointReport::interval(1, 2));

  // Change at the first of two pairs, mutation 2: the unequal-parity round
  // has no successor pair left, so only the suffix certainty is distilled.
  const BellProtocolResult two = run_bell(bell_seq(2, 1, 2), rng);
  CHECK(two.status == TerminalStatus::DistilledOnly);
  CHECK(two.reported_change_point == ChangePointReport::interval(1, 2));
  CHECK(two.consumed == 1);
  CHECK(two.residual_unknown == 1);
  CHECK(two.residual_positions == std::vector<int>{1});
}

TEST_CASE("exhaustive sweep: accounting, purity, coverage, determinism") {
  for (int n = 1; n <= 40; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      for (int mutation = 1; mutation <= 3; ++mutation) {
        const SequenceInstance seq = bell_seq(n, k, mutation);
        BellProtocolResult first;
        for (std::uint64_t trial = 0; trial < 3; ++trial) {
          SeededStream rng = SeededStream::for_trial(777, trial);
          const BellProtocolResult r = run_bell(seq, rng);

          // Every pair is consumed, distilled, or residual, exactly once.
          std::vector<int> seen = transcript_positions(r);
          for (const auto& [position, label] : r.distilled_pairs) {
            REQUIRE(label == seq.label(position));
            seen.push_back(position);
          }
          for (int p : r.residual_positions) seen.push_back(p);
          std::sort(seen.begin(), seen.end());
          REQUIRE(static_cast<int>(seen.size()) == n);
          for (int p = 1; p <= n; ++p) REQUIRE(seen[static_cast<std::size_t>(p - 1)] == p);

          // The report never excludes the truth; exact claims are correct.
          REQUIRE(r.reported_change_point.covers(k));
          if (r.reported_change_point.kind() == ChangePointReport::Kind::Exact)
            REQUIRE(r.reported_change_point.exact_value() == k);

          // A named mutation is always the true one (and needs a change).
          if (r.reported_mutation) {
            REQUIRE(k <= n);
            REQUIRE(*r.reported_mutation == mutation);
          }
          if (r.status == TerminalStatus::Identified) {
            REQUIRE(r.reported_change_point.kind() == ChangePointReport::Kind::Exact);
            REQUIRE(r.reported_mutation.has_value());
          }
          if (r.status == TerminalStatus::NoChangeUnresolved) {
            REQUIRE(r.reported_change_point.hi() == n + 1);
            REQUIRE(r.distilled_mutation == 0);
            REQUIRE_FALSE(r.reported_mutation.has_value());
          }

          // Branch structure, report, and counts depend only on the hidden
          // sequence, never on the measurement randomness.
          if (trial == 0) {
            first = r;
          } else {
            REQUIRE(r.branch_trace == first.branch_trace);
            REQUIRE(r.reported_change_point == first.reported_change_point);
            REQUIRE(r.status == first.status);
            REQUIRE(r.consumed == first.consumed);
            REQUIRE(r.distilled_default == first.distilled_default);
            REQUIRE(r.distilled_mutation == first.distilled_mutation);
            REQUIRE(r.reported_mutation == first.reported_mutation);
            REQUIRE(transcript_positions(r) == transcript_positions(first));
          }
        }
      }
    }
  }
}

TEST_CASE("changes in the first half are always fully identified") {
  for (int n = 3; n <= 40; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      for (int mutation = 1; mutation <= 3; ++mutation) {
        SeededStream rng = SeededStream::for_trial(909, static_cast<std::uint64_t>(k));
        const BellProtocolResult r = run_bell(bell_seq(n, k, mutation), rng);
        REQUIRE(r.status == TerminalStatus::Identified);
        REQUIRE(r.reported_change_point == ChangePointReport::exact(k));
        REQUIRE(r.reported_mutation == mutation);

        // One computational-basis round plus one discrimination plus the
        // two-state prefix search.
        REQUIRE(r.consumed <= 2 + worst_case_measurements(n));
      }
    }
  }
}

TEST_CASE("no change is never misreported as a change") {
  for (int n = 1; n <= 64; ++n) {
    SeededStream rng = SeededStream::for_trial(313, static_cast<std::uint64_t>(n));
    const BellProtocolResult r = run_bell(bell_seq(n, n + 1, 1), rng);
    REQUIRE(r.status == TerminalStatus::NoChangeUnresolved);
    REQUIRE(r.reported_change_point.covers(n + 1));
    REQUIRE(r.distilled_mutation == 0);
    REQUIRE(r.residual_unknown == 0);
  }
}

TEST_CASE("change at the last pair") {
  for (int n : {4, 9, 16, 33}) {
    SeededStream rng(21);

    // Mutation 1 at the end is indistinguishable from no change.
    const BellProtocolResult m1 = run_bell(bell_seq(n, n, 1), rng);
    CHECK(m1.status == TerminalStatus::NoChangeUnresolved);
    CHECK(m1.reported_change_point.covers(n));
    CHECK_FALSE(m1.reported_mutation.has_value());

    // Mutations 2 and 3 reveal a change but never get discriminated.
    for (int mutation : {2, 3}) {
      const BellProtocolResult r = run_bell(bell_seq(n, n, mutation), rng);
      CHECK(r.status == TerminalStatus::DistilledOnly);
      CHECK(r.reported_change_point.covers(n));
      CHECK_FALSE(r.reported_mutation.has_value());
    }
  }
}

TEST_CASE("consumption stays logarithmic per round") {
  for (int n = 1; n <= 256; ++n) {
    const int round_budget = worst_case_measurements(n) + 2;
    for (int k : {1, n / 3 + 1, n, n + 1}) {
      for (int mutation = 1; mutation <= 3; ++mutation) {
        SeededStream rng(4);
        const BellProtocolResult r = run_bell(bell_seq(n, k, mutation), rng);
        // Any run alternates a bounded number of two-measurement rounds with
        // one final logarithmic search.
        REQUIRE(r.consumed <= 2 * round_budget);
        if (!r.branch_trace.empty() &&
            (r.branch_trace.front() == BranchTag::A2 ||
             (r.branch_trace.size() >= 2 && r.branch_trace[1] == BranchTag::A1_2)))
          REQUIRE(r.consumed <= 2 + worst_case_measurements(n));
      }
    }
  }
}

TEST_CASE("labels outside the bell alphabet are rejected") {
  SeededStream rng(0);
  const SequenceInstance bad = sample_sequence(4, 4, ChangePoint{2}, 4);
  CHECK_THROWS_AS(run_bell(bad, rng), std::invalid_argument);
}
