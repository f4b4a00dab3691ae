#include "seqco/dataset/record.hpp"

#include <algorithm>
#include <memory>

namespace seqco::data {

using problems::ProblemKind;
using tok::TokenRole;
using tok::VocabSpec;

int step_token_len(ProblemKind kind, int n) {
  return problems::state_value_count(kind, n) + 2;
}

int max_window_steps(ProblemKind kind, int n, int L) {
  const int prefix_with_split = problems::prefix_value_count(kind, n) + 1;
  if (prefix_with_split > L) return 0;
  return (L - prefix_with_split) / step_token_len(kind, n);
}

int TrajectoryRecord::non_pad_len() const {
  return prefix_len + 1 + window_len * step_token_len(kind, n);
}

int TrajectoryRecord::step_of_position(int p) const {
  if (p < prefix_len) return -1;
  if (p >= non_pad_len()) return -1;
  if (p == prefix_len) return 0;  // prefix splitter reads as the first step
  return (p - prefix_len - 1) / step_token_len(kind, n);
}

TrajectoryRecord build_trajectory(const experts::MdpEpisode& episode,
                                  const tok::TokenSequence& prefix, int L,
                                  Rng& rng) {
  const ProblemKind kind = episode.kind;
  const int n = episode.n;
  const int prefix_len = static_cast<int>(prefix.size()) - 1;
  const int step_len = step_token_len(kind, n);
  const int T = episode.total_steps();

  if (prefix_len + 1 > L) {
    throw Error(errc::capacity,
                std::string("prefix alone exceeds target length for ") +
                    problems::kind_name(kind));
  }
  const int H = max_window_steps(kind, n, L);
  const int w_max = std::min(H, T);
  const int w_min = std::min(2, w_max);
  if (w_max < 1) {
    throw Error(errc::capacity,
                std::string("no step block fits the target length for ") +
                    problems::kind_name(kind));
  }

  const int window_len =
      static_cast<int>(rng.uniform_int(w_min, w_max));
  const int window_start =
      static_cast<int>(rng.uniform_int(0, T - window_len));

  TrajectoryRecord rec;
  rec.kind = kind;
  rec.n = n;
  rec.L = L;
  rec.prefix_len = prefix_len;
  rec.window_start = window_start;
  rec.window_len = window_len;
  rec.ids.assign(L, static_cast<std::uint16_t>(VocabSpec::kPad));
  rec.pad_mask.assign(L, 1);
  rec.loss_mask_stage1.assign(L, 0);
  rec.loss_mask_stage2.assign(L, 0);
  rec.local_pos.assign(L, 0);
  rec.global_pos.resize(L);
  for (int p = 0; p < L; ++p) rec.global_pos[p] = p;

  // Prefix block, splitter included in its local numbering.
  for (int p = 0; p <= prefix_len; ++p) {
    rec.ids[p] = static_cast<std::uint16_t>(prefix.ids[p]);
    rec.pad_mask[p] = 0;
    rec.local_pos[p] = p;
  }

  int pos = prefix_len + 1;
  for (int s = 0; s < window_len; ++s) {
    const auto& step = episode.steps[window_start + s];
    const tok::TokenSequence block =
        tok::encode_step(step.state_values, step.action);
    if (static_cast<int>(block.size()) != step_len) {
      throw Error(errc::shape, "step block length mismatch");
    }
    for (int k = 0; k < step_len; ++k) {
      rec.ids[pos + k] = static_cast<std::uint16_t>(block.ids[k]);
      rec.pad_mask[pos + k] = 0;
      rec.local_pos[pos + k] = k;
      if (block.roles[k] == TokenRole::kState && s >= 1) {
        rec.loss_mask_stage1[pos + k] = 1;
      }
      if (block.roles[k] == TokenRole::kAction) {
        rec.loss_mask_stage2[pos + k] = 1;
      }
    }
    rec.step_feasibility.push_back(step.mask);
    pos += step_len;
  }
  return rec;
}

RecordStream mix_problems(std::vector<RecordStream> streams,
                          std::vector<double> weights, std::uint64_t seed) {
  if (streams.empty()) {
    throw Error(errc::config, "mix_problems requires at least one stream");
  }
  if (weights.empty()) weights.assign(streams.size(), 1.0);
  if (weights.size() != streams.size()) {
    throw Error(errc::config, "one weight per stream required");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw Error(errc::config, "negative stream weight");
    total += w;
  }
  if (total <= 0.0) throw Error(errc::config, "all stream weights are zero");
  if (streams.size() == 1) return streams.front();

  auto rng = std::make_shared<Rng>(mix64(seed));
  auto cumulative = std::make_shared<std::vector<double>>();
  double acc = 0.0;
  for (double w : weights) {
    acc += w / total;
    cumulative->push_back(acc);
  }
  cumulative->back() = 1.0;
  auto shared_streams =
      std::make_shared<std::vector<RecordStream>>(std::move(streams));
  return [rng, cumulative, shared_streams]() {
    const double u = rng->uniform01();
    const std::size_t k =
        std::lower_bound(cumulative->begin(), cumulative->end(), u) -
        cumulative->begin();
    return (*shared_streams)[std::min(k, shared_streams->size() - 1)]();
  };
}

int Batch::max_non_pad_len() const {
  int m = 0;
  for (const auto& r : records) m = std::max(m, r.non_pad_len());
  return m;
}

Batch make_batch(std::vector<TrajectoryRecord> records) {
  if (records.empty()) {
    throw Error(errc::shape, "empty batch");
  }
  const int L = records.front().L;
  for (const auto& r : records) {
    if (r.L != L) throw Error(errc::shape, "mixed record lengths in batch");
  }
  return Batch{std::move(records)};
}

}  // namespace seqco::data
