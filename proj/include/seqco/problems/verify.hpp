#pragma once

#include <span>

#include "seqco/problems/types.hpp"

namespace seqco::problems {

struct VerifyResult {
  bool feasible = false;
  double objective = 0.0;  // valid only when feasible
  std::string reason;      // first violated constraint when infeasible
};

/// Replays an action sequence with constraint checks written independently of
/// feasible_actions/apply_action and recomputes the objective from scratch.
///
/// A sequence is feasible iff every step respects the kind's constraints and
/// the final state is a complete solution: all nodes visited (TSP/ATSP/CVRP),
/// an explicit final depot return (OP/PCTSP/SPCTSP), an explicit terminate
/// (knapsack), or a maximal independent set (MIS). Infeasibility is reported
/// in the result, never thrown.
VerifyResult verify_solution(const ProblemInstance& instance,
                             std::span<const std::int32_t> actions);

}  // namespace seqco::problems
