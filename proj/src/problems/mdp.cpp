#include "seqco/problems/mdp.hpp"

#include <algorithm>
#include <string>

namespace seqco::problems {

namespace {

bool has_depot_or_terminate(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kCvrp:
    case ProblemKind::kOp:
    case ProblemKind::kPctsp:
    case ProblemKind::kSpctsp:
    case ProblemKind::kKnapsack:
      return true;
    default:
      return false;
  }
}

const Eigen::RowVector2d& depot_of(const ProblemInstance& inst) {
  switch (inst.kind) {
    case ProblemKind::kCvrp: return inst.cvrp().depot;
    case ProblemKind::kOp: return inst.op().depot;
    case ProblemKind::kPctsp: return inst.pctsp().depot;
    case ProblemKind::kSpctsp: return inst.spctsp().depot;
    default:
      throw Error(errc::invalid_value, "kind has no depot");
  }
}

const Points& coords_of(const ProblemInstance& inst) {
  switch (inst.kind) {
    case ProblemKind::kTsp: return inst.tsp().coords;
    case ProblemKind::kCvrp: return inst.cvrp().coords;
    case ProblemKind::kOp: return inst.op().coords;
    case ProblemKind::kPctsp: return inst.pctsp().coords;
    case ProblemKind::kSpctsp: return inst.spctsp().coords;
    default:
      throw Error(errc::invalid_value, "kind has no coordinate list");
  }
}

double loc_dist(const ProblemInstance& inst, int a, int b) {
  return euclid(location(inst, a), location(inst, b));
}

[[noreturn]] void violation(const std::string& what) {
  throw Error(errc::constraint_violation, what);
}

}  // namespace

Eigen::RowVector2d location(const ProblemInstance& instance, int loc) {
  if (loc == 0) return depot_of(instance);
  return coords_of(instance).row(loc - 1);
}

int action_space_size(ProblemKind kind, int n) {
  return has_depot_or_terminate(kind) ? n + 1 : n;
}

int max_steps(ProblemKind kind, int n) {
  switch (kind) {
    case ProblemKind::kTsp:
    case ProblemKind::kAtsp:
    case ProblemKind::kMis:
      return n;
    case ProblemKind::kCvrp:
      return 2 * n - 1;  // depot stops can never be consecutive
    case ProblemKind::kOp:
    case ProblemKind::kPctsp:
    case ProblemKind::kSpctsp:
    case ProblemKind::kKnapsack:
      return n + 1;
  }
  throw Error(errc::invalid_value, "unknown problem kind");
}

MdpState initial_state(const ProblemInstance& inst) {
  MdpState s;
  const int n = inst.n;
  switch (inst.kind) {
    case ProblemKind::kTsp:
    case ProblemKind::kAtsp:
      s.current = -1;
      s.visited.assign(n, 0);
      break;
    case ProblemKind::kCvrp:
      s.current = 0;
      s.visited.assign(n, 0);
      s.remaining_capacity = inst.cvrp().capacity;
      break;
    case ProblemKind::kOp:
      s.current = 0;
      s.visited.assign(n, 0);
      s.remaining_length = inst.op().length_limit;
      break;
    case ProblemKind::kPctsp:
    case ProblemKind::kSpctsp:
      s.current = 0;
      s.visited.assign(n, 0);
      break;
    case ProblemKind::kKnapsack:
      s.visited.assign(n, 0);
      s.remaining_volume = inst.knapsack().capacity;
      break;
    case ProblemKind::kMis:
      s.node_status.assign(n, kUndecided);
      break;
  }
  return s;
}

ActionMask feasible_actions(const ProblemInstance& inst, const MdpState& s) {
  const int n = inst.n;
  ActionMask mask(action_space_size(inst.kind, n));
  if (s.terminal) return mask;

  switch (inst.kind) {
    case ProblemKind::kTsp:
    case ProblemKind::kAtsp: {
      for (int v = 0; v < n; ++v) {
        if (!s.visited[v]) mask.set(v);
      }
      break;
    }
    case ProblemKind::kCvrp: {
      const auto& d = inst.cvrp();
      if (s.current != 0) mask.set(0);  // no empty subtours
      for (int i = 1; i <= n; ++i) {
        if (!s.visited[i - 1] && d.demands(i - 1) <= s.remaining_capacity) {
          mask.set(i);
        }
      }
      break;
    }
    case ProblemKind::kOp: {
      mask.set(0);  // returning to the depot is always an option
      for (int i = 1; i <= n; ++i) {
        if (s.visited[i - 1]) continue;
        const double need = loc_dist(inst, s.current, i) + loc_dist(inst, i, 0);
        if (need <= s.remaining_length + kFeasTol) mask.set(i);
      }
      break;
    }
    case ProblemKind::kPctsp:
    case ProblemKind::kSpctsp: {
      const double min_prize = inst.kind == ProblemKind::kPctsp
                                   ? inst.pctsp().min_prize
                                   : inst.spctsp().min_prize;
      if (s.collected_prize >= min_prize - kFeasTol ||
          s.visited_count == n) {
        mask.set(0);
      }
      for (int i = 1; i <= n; ++i) {
        if (!s.visited[i - 1]) mask.set(i);
      }
      break;
    }
    case ProblemKind::kKnapsack: {
      const auto& d = inst.knapsack();
      mask.set(n);  // terminate
      for (int i = 0; i < n; ++i) {
        if (!s.visited[i] && d.volumes(i) <= s.remaining_volume + kFeasTol) {
          mask.set(i);
        }
      }
      break;
    }
    case ProblemKind::kMis: {
      for (int v = 0; v < n; ++v) {
        if (s.node_status[v] == kUndecided) mask.set(v);
      }
      break;
    }
  }
  return mask;
}

MdpState apply_action(const ProblemInstance& inst, const MdpState& state,
                      int action) {
  const int n = inst.n;
  const int space = action_space_size(inst.kind, n);
  if (action < 0 || action >= space) {
    violation("action index outside action space");
  }
  if (state.terminal) violation("episode already terminal");
  if (!feasible_actions(inst, state).test(action)) {
    switch (inst.kind) {
      case ProblemKind::kTsp:
      case ProblemKind::kAtsp:
        violation("node already visited");
      case ProblemKind::kCvrp:
        if (action == 0) violation("depot revisit immediately after depot");
        if (state.visited[action - 1]) violation("customer already visited");
        violation("demand exceeds remaining capacity");
      case ProblemKind::kOp:
        if (action >= 1 && state.visited[action - 1]) {
          violation("node already visited");
        }
        violation("visit plus return exceeds length budget");
      case ProblemKind::kPctsp:
      case ProblemKind::kSpctsp:
        if (action == 0) violation("minimum prize not collected yet");
        if (state.visited[action - 1]) violation("node already visited");
        violation("infeasible action");
      case ProblemKind::kKnapsack:
        if (state.visited[action]) violation("item already selected");
        violation("item exceeds remaining volume");
      case ProblemKind::kMis:
        violation("node already decided or excluded by a neighbor");
    }
  }

  MdpState s = state;
  s.history.push_back(action);

  switch (inst.kind) {
    case ProblemKind::kTsp: {
      if (s.current >= 0) {
        s.tour_length += (inst.tsp().coords.row(s.current) -
                          inst.tsp().coords.row(action))
                             .norm();
      }
      s.current = action;
      s.visited[action] = 1;
      ++s.visited_count;
      s.terminal = s.visited_count == n;
      break;
    }
    case ProblemKind::kAtsp: {
      if (s.current >= 0) s.tour_length += inst.atsp().dist(s.current, action);
      s.current = action;
      s.visited[action] = 1;
      ++s.visited_count;
      s.terminal = s.visited_count == n;
      break;
    }
    case ProblemKind::kCvrp: {
      s.tour_length += loc_dist(inst, s.current, action);
      s.current = action;
      if (action == 0) {
        s.remaining_capacity = inst.cvrp().capacity;
      } else {
        s.remaining_capacity -= inst.cvrp().demands(action - 1);
        s.visited[action - 1] = 1;
        ++s.visited_count;
        s.terminal = s.visited_count == n;
      }
      break;
    }
    case ProblemKind::kOp: {
      const double d = loc_dist(inst, s.current, action);
      s.tour_length += d;
      s.remaining_length -= d;
      s.current = action;
      if (action == 0) {
        s.terminal = true;
      } else {
        s.collected_prize += inst.op().prizes(action - 1);
        s.visited[action - 1] = 1;
        ++s.visited_count;
      }
      break;
    }
    case ProblemKind::kPctsp:
    case ProblemKind::kSpctsp: {
      s.tour_length += loc_dist(inst, s.current, action);
      s.current = action;
      if (action == 0) {
        s.terminal = true;
      } else {
        s.collected_prize += inst.kind == ProblemKind::kPctsp
                                 ? inst.pctsp().prizes(action - 1)
                                 : inst.spctsp().realized(action - 1);
        s.visited[action - 1] = 1;
        ++s.visited_count;
      }
      break;
    }
    case ProblemKind::kKnapsack: {
      if (action == n) {
        s.terminal = true;
      } else {
        s.remaining_volume -= inst.knapsack().volumes(action);
        s.collected_value += inst.knapsack().values(action);
        s.visited[action] = 1;
        ++s.visited_count;
      }
      break;
    }
    case ProblemKind::kMis: {
      s.node_status[action] = kSelected;
      ++s.visited_count;
      const auto& adj = inst.mis().adjacency;
      for (int u = 0; u < n; ++u) {
        if (adj(action, u) != 0 && s.node_status[u] == kUndecided) {
          s.node_status[u] = kExcluded;
        }
      }
      s.terminal = std::none_of(s.node_status.begin(), s.node_status.end(),
                                [](std::uint8_t v) { return v == kUndecided; });
      break;
    }
  }
  return s;
}

double objective(const ProblemInstance& inst, const MdpState& s) {
  if (!s.terminal) {
    throw Error(errc::incomplete_solution,
                "objective requires a terminal state");
  }
  const int n = inst.n;
  switch (inst.kind) {
    case ProblemKind::kTsp:
      return s.tour_length + (inst.tsp().coords.row(s.current) -
                              inst.tsp().coords.row(s.history.front()))
                                 .norm();
    case ProblemKind::kAtsp:
      return s.tour_length + inst.atsp().dist(s.current, s.history.front());
    case ProblemKind::kCvrp:
      return s.tour_length + loc_dist(inst, s.current, 0);
    case ProblemKind::kOp:
      return s.collected_prize;
    case ProblemKind::kPctsp: {
      double penalty = 0.0;
      for (int i = 0; i < n; ++i) {
        if (!s.visited[i]) penalty += inst.pctsp().penalties(i);
      }
      return s.tour_length + penalty;
    }
    case ProblemKind::kSpctsp: {
      double penalty = 0.0;
      for (int i = 0; i < n; ++i) {
        if (!s.visited[i]) penalty += inst.spctsp().penalties(i);
      }
      return s.tour_length + penalty;
    }
    case ProblemKind::kKnapsack:
      return s.collected_value;
    case ProblemKind::kMis:
      return static_cast<double>(s.visited_count);
  }
  throw Error(errc::invalid_value, "unknown problem kind");
}

}  // namespace seqco::problems
