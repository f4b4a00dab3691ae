#include "seqco/model/mask.hpp"

#include <algorithm>

namespace seqco::model {

AttentionMask attention_mask(
    int prefix_len, int seq_len, const std::vector<std::uint8_t>& pad_mask,
    const std::vector<std::int32_t>& step_of_query,
    const std::vector<std::vector<std::int32_t>>& masked_prefix_keys_per_step) {
  if (prefix_len > seq_len ||
      static_cast<int>(pad_mask.size()) != seq_len ||
      static_cast<int>(step_of_query.size()) != seq_len) {
    throw Error(errc::shape, "attention_mask: inconsistent lengths");
  }
  AttentionMask m = AttentionMask::Zero(seq_len, seq_len);
  for (int q = 0; q < seq_len; ++q) {
    const bool q_in_prefix = q < prefix_len;
    const int step = step_of_query[q];
    const std::vector<std::int32_t>* masked = nullptr;
    if (!q_in_prefix && step >= 0 &&
        step < static_cast<int>(masked_prefix_keys_per_step.size())) {
      masked = &masked_prefix_keys_per_step[step];
    }
    for (int k = 0; k < seq_len; ++k) {
      if (pad_mask[k]) continue;
      bool admissible;
      if (q_in_prefix) {
        admissible = k < prefix_len;
      } else if (k < prefix_len) {
        admissible = masked == nullptr ||
                     !std::binary_search(masked->begin(), masked->end(), k);
      } else {
        admissible = k <= q;
      }
      m(q, k) = admissible ? 1 : 0;
    }
  }
  return m;
}

std::vector<std::int32_t> masked_prefix_keys(problems::ProblemKind kind, int n,
                                             const problems::ActionMask& mask) {
  std::vector<std::int32_t> keys;
  for (int a = 0; a < mask.size(); ++a) {
    if (mask.test(a)) continue;
    for (const auto& [begin, end] : problems::prefix_spans_for_action(kind, n, a)) {
      for (int p = begin; p < end; ++p) keys.push_back(p);
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

AttentionMask record_attention_mask(const data::TrajectoryRecord& record,
                                    bool feasibility_masking, int eff_len) {
  const int L = eff_len;
  std::vector<std::uint8_t> pad(record.pad_mask.begin(),
                                record.pad_mask.begin() + L);
  std::vector<std::int32_t> step_of(L);
  for (int p = 0; p < L; ++p) step_of[p] = record.step_of_position(p);
  std::vector<std::vector<std::int32_t>> masked;
  if (feasibility_masking) {
    masked.reserve(record.step_feasibility.size());
    for (const auto& m : record.step_feasibility) {
      masked.push_back(masked_prefix_keys(record.kind, record.n, m));
    }
  }
  return attention_mask(record.prefix_len, L, pad, step_of, masked);
}

}  // namespace seqco::model
