#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "internal.hpp"
#include "seqco/experts/solvers.hpp"
#include "seqco/problems/mdp.hpp"

namespace seqco::experts {

namespace {

using problems::ProblemInstance;
using problems::ProblemKind;

constexpr double kImprove = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::MatrixXd node_dist(const Points& pts) {
  const int n = static_cast<int>(pts.rows());
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d(i, j) = (pts.row(i) - pts.row(j)).norm();
  }
  return d;
}

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

std::vector<int> nearest_neighbor_tour(const Eigen::MatrixXd& c, int start) {
  const int n = static_cast<int>(c.rows());
  std::vector<int> tour{start};
  std::vector<char> used(n, 0);
  used[start] = 1;
  for (int k = 1; k < n; ++k) {
    const int cur = tour.back();
    int best = -1;
    double best_d = kInf;
    for (int j = 0; j < n; ++j) {
      if (!used[j] && c(cur, j) < best_d) {
        best_d = c(cur, j);
        best = j;
      }
    }
    used[best] = 1;
    tour.push_back(best);
  }
  return tour;
}

double cycle_length(const Eigen::MatrixXd& c, const std::vector<int>& t) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) len += c(t[i], t[i + 1]);
  return len + c(t.back(), t.front());
}

/// Symmetric 2-opt on a cycle; repeats passes until one completes with no
/// improving move.
void two_opt_cycle(const Eigen::MatrixXd& c, std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  if (n < 4) return;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < n - 1; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;  // full reversal is a no-op
        const int a = t[(i - 1 + n) % n], b = t[i];
        const int d = t[j], e = t[(j + 1) % n];
        const double delta = c(a, d) + c(b, e) - c(a, b) - c(d, e);
        if (delta < -kImprove) {
          std::reverse(t.begin() + i, t.begin() + j + 1);
          improved = true;
        }
      }
    }
  }
}

/// Or-opt on a directed cycle: relocate segments of length 1..3 without
/// reversing them, so the move is valid for asymmetric costs.
void or_opt_cycle(const Eigen::MatrixXd& c, std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  if (n < 4) return;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int len = 1; len <= 3 && len < n - 1; ++len) {
      for (int i = 0; i + len <= n; ++i) {
        // Segment t[i..i+len), predecessor p, successor q.
        const int p = t[(i - 1 + n) % n];
        const int a = t[i];
        const int b = t[i + len - 1];
        const int q = t[(i + len) % n];
        if (p == b) continue;  // segment covers the whole cycle
        const double gain = c(p, a) + c(b, q) - c(p, q);
        // Try reinserting between every remaining consecutive pair.
        std::vector<int> rest;
        rest.reserve(n - len);
        for (int k = 0; k < n; ++k) {
          if (k < i || k >= i + len) rest.push_back(t[k]);
        }
        const int m = static_cast<int>(rest.size());
        int best_pos = -1;
        double best_delta = -kImprove;
        for (int k = 0; k < m; ++k) {
          const int u = rest[k];
          const int v = rest[(k + 1) % m];
          const double cost = c(u, a) + c(b, v) - c(u, v);
          const double delta = gain - cost;
          if (delta > best_delta + kImprove) {
            best_delta = delta;
            best_pos = k;
          }
        }
        if (best_pos >= 0) {
          std::vector<int> next;
          next.reserve(n);
          for (int k = 0; k <= best_pos; ++k) next.push_back(rest[k]);
          for (int k = 0; k < len; ++k) next.push_back(t[i + k]);
          for (int k = best_pos + 1; k < m; ++k) next.push_back(rest[k]);
          t = std::move(next);
          improved = true;
        }
      }
    }
  }
}

Solution solve_tsp_heuristic(const ProblemInstance& inst) {
  const Eigen::MatrixXd c = inst.kind == ProblemKind::kAtsp
                                ? inst.atsp().dist
                                : node_dist(inst.tsp().coords);
  std::vector<int> tour = nearest_neighbor_tour(c, 0);
  if (inst.kind == ProblemKind::kAtsp) {
    or_opt_cycle(c, tour);
  } else {
    two_opt_cycle(c, tour);
  }
  Solution s;
  s.actions.assign(tour.begin(), tour.end());
  s.objective = cycle_length(c, tour);
  return s;
}

// --- CVRP: Clarke-Wright savings + local search ---------------------------

double route_length(const Eigen::MatrixXd& d, const std::vector<int>& route) {
  double len = d(0, route.front());
  for (std::size_t i = 0; i + 1 < route.size(); ++i) {
    len += d(route[i], route[i + 1]);
  }
  return len + d(route.back(), 0);
}

Solution solve_cvrp_heuristic(const ProblemInstance& inst) {
  const auto& data = inst.cvrp();
  const int n = inst.n;
  const Eigen::MatrixXd d = location_dist(inst);

  // Savings construction over location ids 1..n.
  std::vector<std::vector<int>> routes(n);
  std::vector<double> load(n);
  std::vector<int> route_of(n + 1, -1);
  for (int i = 1; i <= n; ++i) {
    routes[i - 1] = {i};
    load[i - 1] = data.demands(i - 1);
    route_of[i] = i - 1;
  }
  struct Saving {
    double value;
    int i, j;
  };
  std::vector<Saving> savings;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) savings.push_back({d(0, i) + d(0, j) - d(i, j), i, j});
    }
  }
  std::sort(savings.begin(), savings.end(), [](const Saving& a, const Saving& b) {
    if (a.value != b.value) return a.value > b.value;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
  for (const auto& s : savings) {
    const int ra = route_of[s.i];
    const int rb = route_of[s.j];
    if (ra == rb || ra < 0 || rb < 0) continue;
    if (routes[ra].back() != s.i || routes[rb].front() != s.j) continue;
    if (load[ra] + load[rb] > data.capacity) continue;
    for (int v : routes[rb]) {
      routes[ra].push_back(v);
      route_of[v] = ra;
    }
    load[ra] += load[rb];
    routes[rb].clear();
    load[rb] = 0.0;
  }
  routes.erase(std::remove_if(routes.begin(), routes.end(),
                              [](const auto& r) { return r.empty(); }),
               routes.end());

  // Local search: intra-route 2-opt, inter-route tail exchange (2-opt*).
  bool improved = true;
  while (improved) {
    improved = false;
    for (auto& route : routes) {
      const int m = static_cast<int>(route.size());
      for (int i = 0; i < m - 1; ++i) {
        for (int j = i + 1; j < m; ++j) {
          const int a = i == 0 ? 0 : route[i - 1];
          const int b = route[i];
          const int e = route[j];
          const int f = j == m - 1 ? 0 : route[j + 1];
          const double delta = d(a, e) + d(b, f) - d(a, b) - d(e, f);
          if (delta < -kImprove) {
            std::reverse(route.begin() + i, route.begin() + j + 1);
            improved = true;
          }
        }
      }
    }
    for (std::size_t ra = 0; ra < routes.size(); ++ra) {
      for (std::size_t rb = ra + 1; rb < routes.size(); ++rb) {
        auto& A = routes[ra];
        auto& B = routes[rb];
        const int ma = static_cast<int>(A.size());
        const int mb = static_cast<int>(B.size());
        bool applied = false;
        for (int i = 0; i <= ma && !applied; ++i) {
          double head_a = 0.0;
          for (int k = 0; k < i; ++k) head_a += data.demands(A[k] - 1);
          for (int j = 0; j <= mb && !applied; ++j) {
            if (i == ma && j == mb) continue;
            if (i == 0 && j == 0) continue;
            double head_b = 0.0;
            for (int k = 0; k < j; ++k) head_b += data.demands(B[k] - 1);
            const double tail_a = std::accumulate(
                A.begin() + i, A.end(), 0.0,
                [&](double acc, int v) { return acc + data.demands(v - 1); });
            const double tail_b = std::accumulate(
                B.begin() + j, B.end(), 0.0,
                [&](double acc, int v) { return acc + data.demands(v - 1); });
            if (head_a + tail_b > data.capacity) continue;
            if (head_b + tail_a > data.capacity) continue;
            const int ea = i == 0 ? 0 : A[i - 1];
            const int sa = i == ma ? 0 : A[i];
            const int eb = j == 0 ? 0 : B[j - 1];
            const int sb = j == mb ? 0 : B[j];
            const double delta = d(ea, sb) + d(eb, sa) - d(ea, sa) - d(eb, sb);
            if (delta < -kImprove) {
              std::vector<int> new_a(A.begin(), A.begin() + i);
              new_a.insert(new_a.end(), B.begin() + j, B.end());
              std::vector<int> new_b(B.begin(), B.begin() + j);
              new_b.insert(new_b.end(), A.begin() + i, A.end());
              A = std::move(new_a);
              B = std::move(new_b);
              applied = true;
              improved = true;
            }
          }
        }
      }
    }
    routes.erase(std::remove_if(routes.begin(), routes.end(),
                                [](const auto& r) { return r.empty(); }),
                 routes.end());
  }

  std::sort(routes.begin(), routes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  Solution s;
  double total = 0.0;
  for (std::size_t r = 0; r < routes.size(); ++r) {
    if (r > 0) s.actions.push_back(0);
    for (int v : routes[r]) s.actions.push_back(v);
    total += route_length(d, routes[r]);
  }
  s.objective = total;
  return s;
}

// --- OP / PCTSP: ratio-greedy insertion + local search ----------------------

double path_length(const Eigen::MatrixXd& d, const std::vector<int>& visits) {
  double len = 0.0;
  int prev = 0;
  for (int v : visits) {
    len += d(prev, v);
    prev = v;
  }
  return len + d(prev, 0);
}

/// Cheapest insertion position for node v in the depot-anchored tour; returns
/// (position, delta length).
std::pair<int, double> best_insertion(const Eigen::MatrixXd& d,
                                      const std::vector<int>& visits, int v) {
  int best_pos = 0;
  double best_delta = kInf;
  const int m = static_cast<int>(visits.size());
  for (int pos = 0; pos <= m; ++pos) {
    const int u = pos == 0 ? 0 : visits[pos - 1];
    const int w = pos == m ? 0 : visits[pos];
    const double delta = d(u, v) + d(v, w) - d(u, w);
    if (delta < best_delta - kImprove) {
      best_delta = delta;
      best_pos = pos;
    }
  }
  return {best_pos, best_delta};
}

void two_opt_path(const Eigen::MatrixXd& d, std::vector<int>& visits) {
  const int m = static_cast<int>(visits.size());
  if (m < 2) return;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < m - 1; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const int a = i == 0 ? 0 : visits[i - 1];
        const int b = visits[i];
        const int e = visits[j];
        const int f = j == m - 1 ? 0 : visits[j + 1];
        const double delta = d(a, e) + d(b, f) - d(a, b) - d(e, f);
        if (delta < -kImprove) {
          std::reverse(visits.begin() + i, visits.begin() + j + 1);
          improved = true;
        }
      }
    }
  }
}

Solution solve_op_heuristic(const ProblemInstance& inst) {
  const auto& data = inst.op();
  const int n = inst.n;
  const Eigen::MatrixXd d = location_dist(inst);
  std::vector<int> visits;
  std::vector<char> used(n + 1, 0);

  bool changed = true;
  while (changed) {
    changed = false;
    double len = path_length(d, visits);
    int best_v = -1, best_pos = 0;
    double best_score = -kInf;
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      const auto [pos, delta] = best_insertion(d, visits, v);
      if (len + delta > data.length_limit + problems::kFeasTol) continue;
      const double score = data.prizes(v - 1) / std::max(delta, 1e-12);
      if (score > best_score + kImprove) {
        best_score = score;
        best_v = v;
        best_pos = pos;
      }
    }
    if (best_v > 0) {
      visits.insert(visits.begin() + best_pos, best_v);
      used[best_v] = 1;
      changed = true;
    }
    two_opt_path(d, visits);
  }

  Solution s;
  s.actions.assign(visits.begin(), visits.end());
  s.actions.push_back(0);
  double prize = 0.0;
  for (int v : visits) prize += data.prizes(v - 1);
  s.objective = prize;
  return s;
}

/// Shared PCTSP planning core: grow the tour until `need` prize is on board,
/// then keep inserting while a node's penalty exceeds its detour cost,
/// shortening with 2-opt in between.
std::vector<int> pctsp_plan(const Eigen::MatrixXd& d,
                            const Eigen::VectorXd& prizes,
                            const Eigen::VectorXd& penalties, double need,
                            std::vector<char>& used) {
  const int n = static_cast<int>(prizes.size());
  std::vector<int> visits;
  double collected = 0.0;
  while (collected < need - problems::kFeasTol) {
    int best_v = -1, best_pos = 0;
    double best_score = -kInf;
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      const auto [pos, delta] = best_insertion(d, visits, v);
      const double score = prizes(v - 1) / std::max(delta, 1e-12);
      if (score > best_score + kImprove) {
        best_score = score;
        best_v = v;
        best_pos = pos;
      }
    }
    if (best_v < 0) break;  // nothing left to insert
    visits.insert(visits.begin() + best_pos, best_v);
    used[best_v] = 1;
    collected += prizes(best_v - 1);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    two_opt_path(d, visits);
    int best_v = -1, best_pos = 0;
    double best_gain = kImprove;
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      const auto [pos, delta] = best_insertion(d, visits, v);
      const double gain = penalties(v - 1) - delta;
      if (gain > best_gain + kImprove) {
        best_gain = gain;
        best_v = v;
        best_pos = pos;
      }
    }
    if (best_v > 0) {
      visits.insert(visits.begin() + best_pos, best_v);
      used[best_v] = 1;
      changed = true;
    }
  }
  return visits;
}

Solution solve_pctsp_heuristic(const ProblemInstance& inst) {
  const auto& data = inst.pctsp();
  const int n = inst.n;
  const Eigen::MatrixXd d = location_dist(inst);
  std::vector<char> used(n + 1, 0);
  std::vector<int> visits =
      pctsp_plan(d, data.prizes, data.penalties, data.min_prize, used);

  Solution s;
  s.actions.assign(visits.begin(), visits.end());
  s.actions.push_back(0);
  double penalty = 0.0;
  for (int i = 1; i <= n; ++i) {
    if (!used[i]) penalty += data.penalties(i - 1);
  }
  s.objective = path_length(d, visits) + penalty;
  return s;
}

/// SPCTSP re-planning loop: plan on expected prizes for unvisited nodes,
/// execute one visit, swap in the realized prize, repeat. Decisions only ever
/// see realizations of already-visited nodes.
Solution solve_spctsp_heuristic(const ProblemInstance& inst) {
  const auto& data = inst.spctsp();
  const int n = inst.n;
  const Eigen::MatrixXd d = location_dist(inst);

  std::vector<char> visited(n + 1, 0);
  std::vector<int> executed;
  double realized_collected = 0.0;
  int current = 0;

  for (;;) {
    const double need = data.min_prize - realized_collected;
    bool all_visited = true;
    for (int v = 1; v <= n; ++v) all_visited = all_visited && visited[v];
    if (all_visited) break;

    // Plan a path current -> ... -> depot over unvisited nodes. Distances
    // from the "depot slot" are replaced by distances from the current
    // location on the outbound side by planning on a shifted matrix.
    Eigen::MatrixXd dplan = d;
    for (int v = 0; v <= n; ++v) dplan(0, v) = d(current, v);
    std::vector<char> used = visited;
    std::vector<int> plan = pctsp_plan(dplan, data.expected, data.penalties,
                                       std::max(0.0, need), used);
    if (plan.empty()) break;  // prize satisfied, nothing worth a detour
    const int next = plan.front();
    executed.push_back(next);
    visited[next] = 1;
    realized_collected += data.realized(next - 1);
    current = next;
  }

  Solution s;
  s.actions.assign(executed.begin(), executed.end());
  s.actions.push_back(0);
  double length = 0.0;
  int prev = 0;
  for (int v : executed) {
    length += d(prev, v);
    prev = v;
  }
  length += d(prev, 0);
  double penalty = 0.0;
  for (int i = 1; i <= n; ++i) {
    if (!visited[i]) penalty += data.penalties(i - 1);
  }
  s.objective = length + penalty;
  return s;
}

Solution solve_mis_heuristic(const ProblemInstance& inst) {
  const auto& adj = inst.mis().adjacency;
  const int n = inst.n;

  const auto greedy_from = [&](int forced_first) {
    std::vector<int> chosen;
    std::vector<char> alive(n, 1);
    int remaining = n;
    bool first = true;
    while (remaining > 0) {
      int pick = -1;
      if (first && alive[forced_first]) {
        pick = forced_first;
      } else {
        int best_deg = n + 1;
        for (int v = 0; v < n; ++v) {
          if (!alive[v]) continue;
          int deg = 0;
          for (int u = 0; u < n; ++u) deg += alive[u] && adj(v, u) != 0;
          if (deg < best_deg) {
            best_deg = deg;
            pick = v;
          }
        }
      }
      first = false;
      chosen.push_back(pick);
      alive[pick] = 0;
      --remaining;
      for (int u = 0; u < n; ++u) {
        if (alive[u] && adj(pick, u) != 0) {
          alive[u] = 0;
          --remaining;
        }
      }
    }
    return chosen;
  };

  // Plateau restarts: force each vertex as the first selection, keep the
  // best set found.
  std::vector<int> best;
  for (int r = 0; r < n; ++r) {
    std::vector<int> cand = greedy_from(r);
    if (cand.size() > best.size()) best = std::move(cand);
  }
  std::sort(best.begin(), best.end());
  Solution s;
  s.actions.assign(best.begin(), best.end());
  s.objective = static_cast<double>(best.size());
  return s;
}

}  // namespace

Solution solve_heuristic(const ProblemInstance& inst) {
  const auto start = std::chrono::steady_clock::now();
  Solution s;
  switch (inst.kind) {
    case ProblemKind::kTsp:
    case ProblemKind::kAtsp:
      s = solve_tsp_heuristic(inst);
      break;
    case ProblemKind::kCvrp:
      s = solve_cvrp_heuristic(inst);
      break;
    case ProblemKind::kOp:
      s = solve_op_heuristic(inst);
      break;
    case ProblemKind::kPctsp:
      s = solve_pctsp_heuristic(inst);
      break;
    case ProblemKind::kSpctsp:
      s = solve_spctsp_heuristic(inst);
      break;
    case ProblemKind::kKnapsack:
      s = knapsack_dp(inst);
      break;
    case ProblemKind::kMis:
      s = solve_mis_heuristic(inst);
      break;
  }
  s.solver_name = "heuristic";
  s.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return s;
}

}  // namespace seqco::experts
