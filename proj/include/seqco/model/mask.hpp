#pragma once

#include <cstdint>
#include <vector>

#include "seqco/common.hpp"
#include "seqco/dataset/record.hpp"

namespace seqco::model {

using AttentionMask =
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Admissibility matrix (query row, key column) of the prefix-bidirectional
/// mask law:
///   - keys at PAD positions are never admissible;
///   - prefix queries see the whole prefix and nothing after it;
///   - later queries see the prefix except keys masked for their step, and
///     see earlier-or-equal non-prefix positions causally.
///
/// `step_of_query[q]` gives the step owning position q (-1 when none applies,
/// e.g. prefix or pad positions); `masked_prefix_keys_per_step[s]` lists the
/// prefix key positions hidden from step s's queries.
AttentionMask attention_mask(
    int prefix_len, int seq_len, const std::vector<std::uint8_t>& pad_mask,
    const std::vector<std::int32_t>& step_of_query,
    const std::vector<std::vector<std::int32_t>>& masked_prefix_keys_per_step);

/// The mask inputs implied by one training record: step ownership from the
/// token grammar and masked prefix keys from the per-step feasibility
/// bitsets. `feasibility_masking` off yields an unrestricted prefix.
AttentionMask record_attention_mask(const data::TrajectoryRecord& record,
                                    bool feasibility_masking, int eff_len);

/// Prefix key positions hidden for a step with the given feasibility mask.
std::vector<std::int32_t> masked_prefix_keys(problems::ProblemKind kind, int n,
                                             const problems::ActionMask& mask);

}  // namespace seqco::model
