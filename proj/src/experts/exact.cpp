#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <vector>

#include "seqco/experts/solvers.hpp"
#include "seqco/problems/mdp.hpp"

namespace seqco::experts {

namespace {

using problems::ProblemInstance;
using problems::ProblemKind;

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::MatrixXd tsp_cost(const ProblemInstance& inst) {
  if (inst.kind == ProblemKind::kAtsp) return inst.atsp().dist;
  const auto& pts = inst.tsp().coords;
  const int n = inst.n;
  Eigen::MatrixXd c(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) c(i, j) = (pts.row(i) - pts.row(j)).norm();
  }
  return c;
}

/// Held-Karp over subsets; returns the optimal cycle as a node order
/// starting at node 0.
std::pair<std::vector<std::int32_t>, double> held_karp_cycle(
    const Eigen::MatrixXd& c) {
  const int n = static_cast<int>(c.rows());
  const int full = (1 << n) - 1;
  // dp[mask][i]: shortest path 0 -> (mask) -> i, mask includes 0 and i.
  std::vector<std::vector<double>> dp(full + 1,
                                      std::vector<double>(n, kInf));
  std::vector<std::vector<std::int8_t>> parent(
      full + 1, std::vector<std::int8_t>(n, -1));
  dp[1][0] = 0.0;
  for (int mask = 1; mask <= full; mask += 2) {
    for (int i = 0; i < n; ++i) {
      if (dp[mask][i] == kInf) continue;
      for (int j = 1; j < n; ++j) {
        if (mask & (1 << j)) continue;
        const int next = mask | (1 << j);
        const double cand = dp[mask][i] + c(i, j);
        if (cand < dp[next][j]) {
          dp[next][j] = cand;
          parent[next][j] = static_cast<std::int8_t>(i);
        }
      }
    }
  }
  int best_end = -1;
  double best = kInf;
  for (int i = 1; i < n; ++i) {
    const double cand = dp[full][i] + c(i, 0);
    if (cand < best) {
      best = cand;
      best_end = i;
    }
  }
  std::vector<std::int32_t> tour;
  int mask = full;
  int cur = best_end;
  while (cur != -1) {
    tour.push_back(cur);
    const int prev = parent[mask][cur];
    mask ^= (1 << cur);
    cur = prev;
    if (tour.back() == 0) break;
  }
  std::reverse(tour.begin(), tour.end());
  return {tour, best};
}

/// Shortest-path DP from the depot over customer subsets, shared by the
/// CVRP/OP/PCTSP exact solvers. dist is (n+1)x(n+1) in location-id space.
struct PathDp {
  std::vector<std::vector<double>> dp;       // [mask][end-1]
  std::vector<std::vector<std::int8_t>> parent;

  PathDp(const Eigen::MatrixXd& dist, int n) {
    const int full = (1 << n) - 1;
    dp.assign(full + 1, std::vector<double>(n, kInf));
    parent.assign(full + 1, std::vector<std::int8_t>(n, -1));
    for (int j = 0; j < n; ++j) dp[1 << j][j] = dist(0, j + 1);
    for (int mask = 1; mask <= full; ++mask) {
      for (int i = 0; i < n; ++i) {
        if (!(mask & (1 << i)) || dp[mask][i] == kInf) continue;
        for (int j = 0; j < n; ++j) {
          if (mask & (1 << j)) continue;
          const int next = mask | (1 << j);
          const double cand = dp[mask][i] + dist(i + 1, j + 1);
          if (cand < dp[next][j]) {
            dp[next][j] = cand;
            parent[next][j] = static_cast<std::int8_t>(i);
          }
        }
      }
    }
  }

  /// Visit order (customer indices, 0-based) of the stored path for
  /// (mask, end).
  std::vector<int> reconstruct(int mask, int end) const {
    std::vector<int> order;
    int cur = end;
    int m = mask;
    while (cur != -1) {
      order.push_back(cur);
      const int prev = parent[m][cur];
      m ^= (1 << cur);
      cur = prev;
    }
    std::reverse(order.begin(), order.end());
    return order;
  }
};

Eigen::MatrixXd location_dist(const ProblemInstance& inst) {
  const int n = inst.n;
  Eigen::MatrixXd d(n + 1, n + 1);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      d(a, b) = a == b ? 0.0
                       : (problems::location(inst, a) -
                          problems::location(inst, b))
                             .norm();
    }
  }
  return d;
}

void require_exact_budget(const ProblemInstance& inst) {
  if (inst.n > kExactBudget) {
    throw Error(errc::size_limit,
                std::string("exact solver limited to n <= ") +
                    std::to_string(kExactBudget) + " for " +
                    problems::kind_name(inst.kind) +
                    "; use solve_heuristic");
  }
}

Solution solve_tsp_like(const ProblemInstance& inst) {
  require_exact_budget(inst);
  auto [tour, obj] = held_karp_cycle(tsp_cost(inst));
  Solution s;
  s.actions.assign(tour.begin(), tour.end());
  s.objective = obj;
  return s;
}

Solution solve_cvrp(const ProblemInstance& inst) {
  require_exact_budget(inst);
  const auto& d = inst.cvrp();
  const int n = inst.n;
  const int full = (1 << n) - 1;
  const Eigen::MatrixXd dist = location_dist(inst);
  PathDp paths(dist, n);

  std::vector<double> route_cost(full + 1, kInf);
  std::vector<int> route_end(full + 1, -1);
  for (int mask = 1; mask <= full; ++mask) {
    double demand = 0.0;
    for (int j = 0; j < n; ++j) {
      if (mask & (1 << j)) demand += d.demands(j);
    }
    if (demand > d.capacity) continue;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1 << j)) || paths.dp[mask][j] == kInf) continue;
      const double cand = paths.dp[mask][j] + dist(j + 1, 0);
      if (cand < route_cost[mask]) {
        route_cost[mask] = cand;
        route_end[mask] = j;
      }
    }
  }

  // Partition customers into routes.
  std::vector<double> best(full + 1, kInf);
  std::vector<int> pick(full + 1, 0);
  best[0] = 0.0;
  for (int mask = 1; mask <= full; ++mask) {
    for (int sub = mask; sub != 0; sub = (sub - 1) & mask) {
      if (route_cost[sub] == kInf || best[mask ^ sub] == kInf) continue;
      const double cand = best[mask ^ sub] + route_cost[sub];
      if (cand < best[mask]) {
        best[mask] = cand;
        pick[mask] = sub;
      }
    }
  }

  std::vector<std::vector<int>> routes;
  for (int mask = full; mask != 0; mask ^= pick[mask]) {
    routes.push_back(paths.reconstruct(pick[mask], route_end[pick[mask]]));
  }
  std::sort(routes.begin(), routes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  Solution s;
  for (std::size_t r = 0; r < routes.size(); ++r) {
    if (r > 0) s.actions.push_back(0);
    for (int j : routes[r]) s.actions.push_back(j + 1);
  }
  s.objective = best[full];
  return s;
}

Solution solve_op(const ProblemInstance& inst) {
  require_exact_budget(inst);
  const auto& d = inst.op();
  const int n = inst.n;
  const int full = (1 << n) - 1;
  const Eigen::MatrixXd dist = location_dist(inst);
  PathDp paths(dist, n);

  double best_prize = 0.0;
  double best_len = 0.0;
  int best_mask = 0;
  int best_end = -1;
  for (int mask = 1; mask <= full; ++mask) {
    double prize = 0.0;
    for (int j = 0; j < n; ++j) {
      if (mask & (1 << j)) prize += d.prizes(j);
    }
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1 << j)) || paths.dp[mask][j] == kInf) continue;
      const double len = paths.dp[mask][j] + dist(j + 1, 0);
      if (len > d.length_limit + problems::kFeasTol) continue;
      if (prize > best_prize + 1e-15 ||
          (prize > best_prize - 1e-15 && len < best_len - 1e-15)) {
        best_prize = prize;
        best_len = len;
        best_mask = mask;
        best_end = j;
      }
    }
  }

  Solution s;
  if (best_mask != 0) {
    for (int j : paths.reconstruct(best_mask, best_end)) {
      s.actions.push_back(j + 1);
    }
  }
  s.actions.push_back(0);
  s.objective = best_prize;
  return s;
}

Solution solve_pctsp(const ProblemInstance& inst, bool clairvoyant) {
  require_exact_budget(inst);
  const int n = inst.n;
  const Eigen::VectorXd& prizes = clairvoyant ? inst.spctsp().realized
                                              : inst.pctsp().prizes;
  const Eigen::VectorXd& penalties = clairvoyant ? inst.spctsp().penalties
                                                 : inst.pctsp().penalties;
  const double min_prize =
      clairvoyant ? inst.spctsp().min_prize : inst.pctsp().min_prize;
  const int full = (1 << n) - 1;
  const Eigen::MatrixXd dist = location_dist(inst);
  PathDp paths(dist, n);
  const double total_penalty = penalties.sum();

  double best_obj = kInf;
  int best_mask = -1;
  int best_end = -1;
  for (int mask = 1; mask <= full; ++mask) {
    double prize = 0.0;
    double penalty_in = 0.0;
    for (int j = 0; j < n; ++j) {
      if (mask & (1 << j)) {
        prize += prizes(j);
        penalty_in += penalties(j);
      }
    }
    if (prize < min_prize - problems::kFeasTol && mask != full) continue;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1 << j)) || paths.dp[mask][j] == kInf) continue;
      const double obj = paths.dp[mask][j] + dist(j + 1, 0) +
                         (total_penalty - penalty_in);
      if (obj < best_obj - 1e-15) {
        best_obj = obj;
        best_mask = mask;
        best_end = j;
      }
    }
  }

  Solution s;
  for (int j : paths.reconstruct(best_mask, best_end)) {
    s.actions.push_back(j + 1);
  }
  s.actions.push_back(0);
  s.objective = best_obj;
  return s;
}

Solution solve_mis(const ProblemInstance& inst) {
  require_exact_budget(inst);
  const auto& adj = inst.mis().adjacency;
  const int n = inst.n;
  std::vector<std::uint32_t> neighbor(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (adj(u, v) != 0) neighbor[u] |= (1u << v);
    }
  }
  int best_mask = 0;
  int best_size = 0;
  const int full = (1 << n) - 1;
  for (int mask = 1; mask <= full; ++mask) {
    const int size = std::popcount(static_cast<unsigned>(mask));
    if (size <= best_size) continue;
    bool independent = true;
    for (int u = 0; u < n && independent; ++u) {
      if (mask & (1 << u)) {
        independent = (neighbor[u] & static_cast<std::uint32_t>(mask)) == 0;
      }
    }
    if (independent) {
      best_mask = mask;
      best_size = size;
    }
  }
  Solution s;
  for (int u = 0; u < n; ++u) {
    if (best_mask & (1 << u)) s.actions.push_back(u);
  }
  s.objective = best_size;
  return s;
}

}  // namespace

Solution knapsack_dp(const ProblemInstance& inst) {
  const auto& d = inst.knapsack();
  const int n = inst.n;
  // Generated volumes carry at most two decimals, so the x100 scaling is
  // lossless.
  const auto scaled = [](double v) {
    return static_cast<int>(std::llround(v * 100.0));
  };
  const int cap = scaled(d.capacity);
  std::vector<double> dp(cap + 1, 0.0);
  std::vector<std::vector<char>> take(n, std::vector<char>(cap + 1, 0));
  for (int i = 0; i < n; ++i) {
    const int w = scaled(d.volumes(i));
    const double v = d.values(i);
    for (int c = cap; c >= w; --c) {
      if (dp[c - w] + v > dp[c]) {
        dp[c] = dp[c - w] + v;
        take[i][c] = 1;
      }
    }
  }
  Solution s;
  int c = cap;
  std::vector<int> chosen;
  for (int i = n - 1; i >= 0; --i) {
    if (take[i][c]) {
      chosen.push_back(i);
      c -= scaled(d.volumes(i));
    }
  }
  std::sort(chosen.begin(), chosen.end());
  s.actions.assign(chosen.begin(), chosen.end());
  s.actions.push_back(n);  // terminate
  s.objective = dp[cap];
  return s;
}

Solution solve_exact(const ProblemInstance& inst) {
  const auto start = std::chrono::steady_clock::now();
  Solution s;
  switch (inst.kind) {
    case ProblemKind::kTsp:
    case ProblemKind::kAtsp:
      s = solve_tsp_like(inst);
      break;
    case ProblemKind::kCvrp:
      s = solve_cvrp(inst);
      break;
    case ProblemKind::kOp:
      s = solve_op(inst);
      break;
    case ProblemKind::kPctsp:
      s = solve_pctsp(inst, false);
      break;
    case ProblemKind::kSpctsp:
      s = solve_pctsp(inst, true);
      break;
    case ProblemKind::kKnapsack:
      s = knapsack_dp(inst);
      break;
    case ProblemKind::kMis:
      s = solve_mis(inst);
      break;
  }
  s.solver_name = "exact";
  s.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return s;
}

}  // namespace seqco::experts
