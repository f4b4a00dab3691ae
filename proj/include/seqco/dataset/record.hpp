#pragma once

#include <functional>
#include <vector>

#include "seqco/experts/solution.hpp"
#include "seqco/rng.hpp"
#include "seqco/tokenizer/encode.hpp"

namespace seqco::data {

/// Tokens per step block: state tokens + action splitter + action token.
int step_token_len(problems::ProblemKind kind, int n);

/// Maximum number of steps that fit after the prefix and its splitter in a
/// record of length L.
int max_window_steps(problems::ProblemKind kind, int n, int L);

/// Fixed-length training record: a tokenized episode window behind the
/// instance prefix, padded to L.
///
/// Layout: ids[0..prefix_len) prefix values, ids[prefix_len] prefix splitter,
/// then window_len step blocks, then padding. Local positions restart at 0 at
/// the first prefix token and at each step block; global positions simply
/// count 0..L-1. The stage-1 mask selects state tokens of window steps after
/// the first (their predecessors carry the conditioning action); the stage-2
/// mask selects every action token. Masks mark target positions; the logit
/// one position to the left scores them.
struct TrajectoryRecord {
  problems::ProblemKind kind{};
  std::int32_t n = 0;
  std::int32_t L = 0;
  std::int32_t prefix_len = 0;    // value tokens; splitter sits at this index
  std::int32_t window_start = 0;  // first episode step in the window
  std::int32_t window_len = 0;    // steps in the window
  std::vector<std::uint16_t> ids;
  std::vector<std::uint8_t> pad_mask;  // 1 = PAD position
  std::vector<std::uint8_t> loss_mask_stage1;
  std::vector<std::uint8_t> loss_mask_stage2;
  std::vector<std::int32_t> local_pos;
  std::vector<std::int32_t> global_pos;
  std::vector<problems::ActionMask> step_feasibility;  // one per window step

  int non_pad_len() const;
  /// Step index (0-based within the window) owning position p, or -1 for
  /// prefix positions. The prefix splitter belongs to step 0; pads report -1.
  int step_of_position(int p) const;
};

/// Clips a window of the episode, tokenizes it behind the prefix and fills
/// every derived field. Window length is drawn uniformly from [2, min(H,T)]
/// (shrunk only when the episode itself is shorter), the start uniformly
/// among valid offsets.
TrajectoryRecord build_trajectory(const experts::MdpEpisode& episode,
                                  const tok::TokenSequence& prefix, int L,
                                  Rng& rng);

/// Infinite stream of records.
using RecordStream = std::function<TrajectoryRecord()>;

/// Draws the next record from a kind chosen by weight (uniform by default).
/// Throws `config` when no streams are given.
RecordStream mix_problems(std::vector<RecordStream> streams,
                          std::vector<double> weights, std::uint64_t seed);

struct Batch {
  std::vector<TrajectoryRecord> records;

  int size() const { return static_cast<int>(records.size()); }
  int seq_len() const { return records.empty() ? 0 : records.front().L; }
  /// Longest non-pad extent across records; forward passes may stop there.
  int max_non_pad_len() const;
};

/// Stacks records into a batch; all records must share one L (`shape` error
/// otherwise, including the empty case).
Batch make_batch(std::vector<TrajectoryRecord> records);

}  // namespace seqco::data
