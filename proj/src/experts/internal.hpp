#pragma once

#include "seqco/experts/solution.hpp"

namespace seqco::experts {

/// Exact 0/1 knapsack over x100-scaled integer volumes; shared by the exact
/// and heuristic entry points.
Solution knapsack_dp(const problems::ProblemInstance& instance);

}  // namespace seqco::experts
