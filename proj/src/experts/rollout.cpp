#include <chrono>

#include "seqco/experts/solvers.hpp"
#include "seqco/problems/mdp.hpp"
#include "seqco/rng.hpp"

namespace seqco::experts {

Solution random_rollout(const problems::ProblemInstance& inst,
                        std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(mix64(seed));
  problems::MdpState state = problems::initial_state(inst);
  Solution s;
  while (!state.terminal) {
    const problems::ActionMask mask = problems::feasible_actions(inst, state);
    const std::vector<int> options = mask.set_bits();
    const int action =
        options[static_cast<std::size_t>(rng.bounded(options.size()))];
    state = problems::apply_action(inst, state, action);
    s.actions.push_back(action);
  }
  s.objective = problems::objective(inst, state);
  s.solver_name = "random";
  s.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return s;
}

MdpEpisode trace_solution(const problems::ProblemInstance& inst,
                          const Solution& solution) {
  MdpEpisode ep;
  ep.kind = inst.kind;
  ep.n = inst.n;
  ep.instance_seed = inst.seed;
  problems::MdpState state = problems::initial_state(inst);
  for (std::size_t t = 0; t < solution.actions.size(); ++t) {
    const int action = solution.actions[t];
    EpisodeStep step;
    step.state_values = problems::state_step_values(inst, state);
    step.mask = problems::feasible_actions(inst, state);
    step.action = action;
    if (action < 0 || action >= step.mask.size() || !step.mask.test(action)) {
      throw Error(errc::constraint_violation,
                  "infeasible action at step " + std::to_string(t));
    }
    ep.steps.push_back(std::move(step));
    state = problems::apply_action(inst, state, action);
  }
  if (!state.terminal) {
    throw Error(errc::constraint_violation,
                "action sequence ends before the episode is complete");
  }
  ep.final_objective = problems::objective(inst, state);
  return ep;
}

}  // namespace seqco::experts
