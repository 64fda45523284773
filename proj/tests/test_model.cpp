#include "doctest.h"

#include <cmath>

#include "qcp/io.hpp"
#include "qcp/model.hpp"
#include "qcp/rng.hpp"

using namespace qcp;

TEST_CASE("state labels") {
  CHECK(StateLabel::default_state().is_default());
  CHECK(StateLabel::default_state().to_string() == "D");
  CHECK(StateLabel::mutation(1).is_mutation());
  CHECK(StateLabel::mutation(1).mutation_index() == 1);
  CHECK(StateLabel::mutation(3).to_string() == "M3");
  CHECK(StateLabel::mutation(2) == StateLabel::mutation(2));
  CHECK(StateLabel::mutation(2) != StateLabel::mutation(3));
  CHECK_THROWS_AS(StateLabel::mutation(0), std::invalid_argument);
  CHECK_THROWS_AS(StateLabel::default_state().mutation_index(), std::logic_error);
}

TEST_CASE("source model validation") {
  CHECK(SourceModel::orthogonal(8).mutation_count == 1);
  CHECK(SourceModel::nonorthogonal(8, 0.4).overlap == doctest::Approx(0.4));
  CHECK(SourceModel::bell(8).mutation_count == 3);
  CHECK_THROWS_AS(SourceModel::orthogonal(0), std::invalid_argument);
  CHECK_THROWS_AS(SourceModel::nonorthogonal(8, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(SourceModel::nonorthogonal(8, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SourceModel(8, Regime::Orthogonal, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(SourceModel(8, Regime::BellSet, 0.0, 2), std::invalid_argument);
}

TEST_CASE("sequence construction at the three anchor change points") {
  const SourceModel source = SourceModel::orthogonal(4);

  const SequenceInstance all_mut = sample_sequence(source, ChangePoint{1}, 1);
  for (int p = 1; p <= 4; ++p) CHECK(all_mut.label(p) == StateLabel::mutation(1));
  CHECK_FALSE(all_mut.no_change());

  const SequenceInstance mixed = sample_sequence(source, ChangePoint{3}, 1);
  CHECK(mixed.label(1).is_default());
  CHECK(mixed.label(2).is_default());
  CHECK(mixed.label(3) == StateLabel::mutation(1));
  CHECK(mixed.label(4) == StateLabel::mutation(1));

  const SequenceInstance all_def = sample_sequence(source, ChangePoint{5}, 1);
  for (int p = 1; p <= 4; ++p) CHECK(all_def.label(p).is_default());
  CHECK(all_def.no_change());
  CHECK(all_def.change_point() == 5);
}

TEST_CASE("sequence serializes to the documented json shape") {
  const SequenceInstance seq = sample_sequence(SourceModel::orthogonal(4), ChangePoint{3}, 1);
  CHECK(to_json(seq).dump() == R"({"n":4,"k":3,"mutation":1,"labels":["D","D","M1","M1"]})");

  const SequenceInstance bell = sample_sequence(SourceModel::bell(3), ChangePoint{2}, 3);
  CHECK(to_json(bell).dump() == R"({"n":3,"k":2,"mutation":3,"labels":["D","M3","M3"]})");
}

TEST_CASE("prefix/suffix split holds for every change point up to n = 64") {
  for (int n = 1; n <= 64; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      for (int mutation : {1, 3}) {
        const SequenceInstance seq = sample_sequence(n, 3, ChangePoint{k}, mutation);
        REQUIRE(seq.n() == n);
        REQUIRE(seq.change_point() == k);
        REQUIRE(seq.mutation() == mutation);
        for (int p = 1; p <= n; ++p) {
          const bool mutated = p >= k;
          REQUIRE(seq.label(p).is_mutation() == mutated);
          if (mutated) REQUIRE(seq.label(p).mutation_index() == mutation);
        }
      }
    }
  }
}

TEST_CASE("label validation rejects inconsistent sequences") {
  const StateLabel d = StateLabel::default_state();
  const StateLabel m = StateLabel::mutation(1);
  CHECK_THROWS_AS(SequenceInstance({d, m, d}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(SequenceInstance({d, d, m}, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(SequenceInstance({d, d, m}, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(SequenceInstance({}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(SequenceInstance({d, d}, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(SequenceInstance({d, d}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(SequenceInstance({d}, 1, 1), std::invalid_argument);  // pos 1 must be mutated

  CHECK_THROWS_AS(SequenceInstance::from_labels({m, d}), std::invalid_argument);
  const SequenceInstance ok = SequenceInstance::from_labels({d, m, m});
  CHECK(ok.change_point() == 2);
  const SequenceInstance fallback = SequenceInstance::from_labels({d, d}, 2);
  CHECK(fallback.no_change());
  CHECK(fallback.mutation() == 2);
}

TEST_CASE("position access is range checked") {
  const SequenceInstance seq = sample_sequence(SourceModel::orthogonal(3), ChangePoint{2}, 1);
  CHECK_THROWS_AS(seq.label(0), std::invalid_argument);
  CHECK_THROWS_AS(seq.label(4), std::invalid_argument);
}

TEST_CASE("subsequence re-indexes from one and preserves validity") {
  const SequenceInstance seq = sample_sequence(SourceModel::orthogonal(8), ChangePoint{5}, 1);

  const SequenceInstance mid = subsequence(seq, 3, 6);
  CHECK(mid.n() == 4);
  CHECK(mid.change_point() == 3);  // global 5 maps to local 3

  const SequenceInstance pre = subsequence(seq, 1, 4, 7);
  CHECK(pre.no_change());
  CHECK(pre.mutation() == 7);  // fallback names the hypothetical mutation

  const SequenceInstance post = subsequence(seq, 5, 8);
  CHECK(post.change_point() == 1);

  CHECK_THROWS_AS(subsequence(seq, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(subsequence(seq, 5, 9), std::invalid_argument);
  CHECK_THROWS_AS(subsequence(seq, 6, 5), std::invalid_argument);
}

TEST_CASE("change point draw hits the boundary cells") {
  ConstantStream zero(0.0);
  CHECK(draw_change_point(6, zero).k == 1);
  ConstantStream top(0.9999999999);
  CHECK(draw_change_point(6, top).k == 7);
}

TEST_CASE("change point draw is uniform over [1, n+1]") {
  const std::uint64_t draws = 1000000;
  for (int n : {1, 4}) {
    SeededStream rng(2024);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 2, 0);
    for (std::uint64_t t = 0; t < draws; ++t) {
      const int k = draw_change_point(n, rng).k;
      REQUIRE(k >= 1);
      REQUIRE(k <= n + 1);
      ++counts[static_cast<std::size_t>(k)];
    }
    const double p = 1.0 / (n + 1);
    const double mean = static_cast<double>(draws) * p;
    const double sigma = std::sqrt(static_cast<double>(draws) * p * (1.0 - p));
    for (int k = 1; k <= n + 1; ++k) {
      const double deviation =
          std::abs(static_cast<double>(counts[static_cast<std::size_t>(k)]) - mean);
      CHECK(deviation < 5.0 * sigma);
    }
  }
}

TEST_CASE("trial streams are deterministic and well separated") {
  SeededStream a = SeededStream::for_trial(99, 0);
  SeededStream b = SeededStream::for_trial(99, 0);
  SeededStream c = SeededStream::for_trial(99, 1);
  bool all_equal = true;
  bool any_differ = false;
  for (int i = 0; i < 64; ++i) {
    const double ua = a.next_unit();
    all_equal = all_equal && ua == b.next_unit();
    any_differ = any_differ || ua != c.next_unit();
  }
  CHECK(all_equal);
  CHECK(any_differ);
}
