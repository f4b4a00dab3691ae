#pragma once

#include <string>
#include <vector>

#include "seqco/problems/features.hpp"
#include "seqco/problems/types.hpp"

namespace seqco::experts {

struct Solution {
  std::vector<std::int32_t> actions;
  double objective = 0.0;
  std::string solver_name;
  double elapsed_seconds = 0.0;
};

/// One recorded step: the observations and the action mask seen before the
/// action was taken.
struct EpisodeStep {
  std::vector<problems::TaggedValue> state_values;
  problems::ActionMask mask;
  std::int32_t action = 0;
};

struct MdpEpisode {
  problems::ProblemKind kind{};
  std::int32_t n = 0;
  std::int64_t instance_seed = 0;
  std::vector<EpisodeStep> steps;
  double final_objective = 0.0;

  int total_steps() const { return static_cast<int>(steps.size()); }
};

}  // namespace seqco::experts
