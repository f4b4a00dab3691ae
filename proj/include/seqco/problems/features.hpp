#pragma once

#include <utility>
#include <vector>

#include "seqco/problems/types.hpp"

namespace seqco::problems {

/// Raw (untokenized) value with its tokenization route.
struct TaggedValue {
  enum class Tag : std::uint8_t { kDiscrete, kContinuous };
  Tag tag;
  double value;
};

/// Published prefix-token length per kind: TSP 2N, CVRP/OP 3N+2,
/// PCTSP/SPCTSP 4N+2, knapsack 2N, ATSP/MIS N*N.
int prefix_value_count(ProblemKind kind, int n);

/// Published per-step state-token length: TSP 2, CVRP 3, OP 4,
/// PCTSP/SPCTSP 3, knapsack 1, ATSP/MIS N.
int state_value_count(ProblemKind kind, int n);

/// Static instance features in prefix layout order. Continuous values are
/// pre-normalized where the published feature designs call for it (CVRP
/// demands and capacity budgets are fractions of vehicle capacity).
std::vector<TaggedValue> static_prefix_values(const ProblemInstance& instance);

/// Dynamic observations of a state in step layout order.
std::vector<TaggedValue> state_step_values(const ProblemInstance& instance,
                                           const MdpState& state);

/// Half-open prefix index ranges describing the tokens that belong to one
/// action's entity (a city's coordinates and per-node scalars, a matrix row,
/// an item's value/volume pair). Used to project action feasibility onto
/// prefix attention. Empty for actions with no static footprint (knapsack
/// terminate, depot-return kinds share the depot span).
std::vector<std::pair<int, int>> prefix_spans_for_action(ProblemKind kind,
                                                         int n, int action);

}  // namespace seqco::problems
