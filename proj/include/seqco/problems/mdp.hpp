#pragma once

#include "seqco/problems/types.hpp"

namespace seqco::problems {

/// Size of the action space: n for TSP/ATSP/MIS, n+1 for kinds with a
/// depot-return or terminate action (CVRP, OP, PCTSP, SPCTSP, knapsack).
int action_space_size(ProblemKind kind, int n);

/// Episode length T of a complete solution is bounded by this.
int max_steps(ProblemKind kind, int n);

MdpState initial_state(const ProblemInstance& instance);

/// Bit i is set iff action i keeps the episode feasible from this state.
/// A terminal state yields an empty mask.
ActionMask feasible_actions(const ProblemInstance& instance,
                            const MdpState& state);

/// Applies a feasible action; throws `constraint-violation` naming the
/// violated constraint otherwise.
MdpState apply_action(const ProblemInstance& instance, const MdpState& state,
                      int action);

/// Objective of a completed episode (terminal state required, else
/// `incomplete-solution`). Routing kinds include the closing arc(s).
double objective(const ProblemInstance& instance, const MdpState& state);

/// Slack tolerance for budget-boundary feasibility decisions (OP length,
/// PCTSP prize threshold).
inline constexpr double kFeasTol = 1e-9;

inline double euclid(const Eigen::RowVector2d& a, const Eigen::RowVector2d& b) {
  return (a - b).norm();
}

/// Location coordinates in the unified id space of depot kinds
/// (0 = depot, i >= 1 = customer i-1).
Eigen::RowVector2d location(const ProblemInstance& instance, int loc);

}  // namespace seqco::problems
