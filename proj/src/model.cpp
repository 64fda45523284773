#include "qcp/model.hpp"

namespace qcp {

SequenceInstance::SequenceInstance(std::vector<StateLabel> labels, int change_point,
                                   int mutation)
    : labels_(std::move(labels)), change_point_(change_point), mutation_(mutation) {
  const int len = n();
  if (len < 1) throw std::invalid_argument("sequence must contain at least one pair");
  if (change_point_ < 1 || change_point_ > len + 1)
    throw std::invalid_argument("change point out of range");
  if (mutation_ < 1) throw std::invalid_argument("mutation index must be >= 1");
  const StateLabel mut = StateLabel::mutation(mutation_);
  for (int i = 1; i <= len; ++i) {
    const StateLabel expected = i < change_point_ ? StateLabel::default_state() : mut;
    if (labels_[static_cast<std::size_t>(i - 1)] != expected)
      throw std::invalid_argument("labels do not match the declared change point");
  }
}

SequenceInstance SequenceInstance::from_labels(std::vector<StateLabel> labels,
                                               int fallback_mutation) {
  const int len = static_cast<int>(labels.size());
  if (len < 1) throw std::invalid_argument("sequence must contain at least one pair");
  int k = len + 1;
  int mutation = fallback_mutation;
  for (int i = 1; i <= len; ++i) {
    if (labels[static_cast<std::size_t>(i - 1)].is_mutation()) {
      k = i;
      mutation = labels[static_cast<std::size_t>(i - 1)].mutation_index();
      break;
    }
  }
  return SequenceInstance(std::move(labels), k, mutation);
}

ChangePoint draw_change_point(int n, RandomStream& rng) {
  if (n < 1) throw std::invalid_argument("sequence length must be >= 1");
  const double u = rng.next_unit();
  int k = 1 + static_cast<int>(u * static_cast<double>(n + 1));
  if (k > n + 1) k = n + 1;
  return ChangePoint{k};
}

SequenceInstance sample_sequence(int n, int mutation_count, ChangePoint cp, int mutation) {
  if (n < 1) throw std::invalid_argument("sequence length must be >= 1");
  if (cp.k < 1 || cp.k > n + 1) throw std::invalid_argument("change point out of range");
  if (mutation < 1 || mutation > mutation_count)
    throw std::invalid_argument("mutation index out of range for this source");
  std::vector<StateLabel> labels(static_cast<std::size_t>(n));
  const StateLabel mut = StateLabel::mutation(mutation);
  for (int i = cp.k; i <= n; ++i) labels[static_cast<std::size_t>(i - 1)] = mut;
  return SequenceInstance(std::move(labels), cp.k, mutation);
}

SequenceInstance sample_sequence(const SourceModel& source, ChangePoint cp, int mutation) {
  return sample_sequence(source.n, source.mutation_count, cp, mutation);
}

SequenceInstance subsequence(const SequenceInstance& seq, int lo, int hi,
                             int fallback_mutation) {
  if (lo < 1 || hi > seq.n() || lo > hi) throw std::invalid_argument("bad slice bounds");
  std::vector<StateLabel> slice(seq.labels().begin() + (lo - 1), seq.labels().begin() + hi);
  return SequenceInstance::from_labels(std::move(slice), fallback_mutation);
}

}  // namespace qcp
