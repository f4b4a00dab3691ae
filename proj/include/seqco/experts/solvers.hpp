#pragma once

#include "seqco/experts/solution.hpp"
#include "seqco/problems/types.hpp"

namespace seqco::experts {

/// Largest size the exact routing/MIS solvers accept (subset dynamic
/// programming / enumeration stays in the seconds range up to here).
inline constexpr int kExactBudget = 12;

/// Optimal solution. Routing kinds and MIS require n <= kExactBudget
/// (`size-limit` error beyond); knapsack runs exact DP at any size.
/// SPCTSP is solved clairvoyantly on the realized prizes, which bounds
/// every non-clairvoyant policy.
Solution solve_exact(const problems::ProblemInstance& instance);

/// Feasible solution at any size: nearest-neighbor + 2-opt (TSP), or-opt
/// relocation (ATSP), savings + local search (CVRP), ratio-greedy insertion +
/// local search (OP/PCTSP), re-planning loop on expected prizes (SPCTSP),
/// exact DP (knapsack), iterated min-degree greedy (MIS).
Solution solve_heuristic(const problems::ProblemInstance& instance);

/// Uniform choice among feasible actions until terminal.
Solution random_rollout(const problems::ProblemInstance& instance,
                        std::uint64_t seed);

/// Replays a feasible solution, recording per-step state values and action
/// masks. Throws `constraint-violation` naming the offending step otherwise.
MdpEpisode trace_solution(const problems::ProblemInstance& instance,
                          const Solution& solution);

}  // namespace seqco::experts
