#include "seqco/problems/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace seqco::problems {

// The checks below deliberately do not call feasible_actions/apply_action;
// they maintain their own bookkeeping and recompute objectives from scratch
// so they can serve as an oracle for the MDP implementation.

namespace {

constexpr double kTol = 1e-9;

VerifyResult fail(const std::string& reason) { return {false, 0.0, reason}; }
VerifyResult ok(double obj) { return {true, obj, ""}; }

double dist(const Eigen::RowVector2d& a, const Eigen::RowVector2d& b) {
  return (a - b).norm();
}

VerifyResult verify_tour(const Eigen::MatrixXd& cost, int n,
                         std::span<const std::int32_t> a) {
  if (static_cast<int>(a.size()) != n) return fail("tour length != n");
  std::vector<char> seen(n, 0);
  for (int v : a) {
    if (v < 0 || v >= n) return fail("node index out of range");
    if (seen[v]) return fail("node revisited");
    seen[v] = 1;
  }
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) len += cost(a[i], a[i + 1]);
  len += cost(a.back(), a.front());
  return ok(len);
}

}  // namespace

VerifyResult verify_solution(const ProblemInstance& inst,
                             std::span<const std::int32_t> actions) {
  const int n = inst.n;
  switch (inst.kind) {
    case ProblemKind::kTsp: {
      const auto& pts = inst.tsp().coords;
      Eigen::MatrixXd cost(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          cost(i, j) = (pts.row(i) - pts.row(j)).norm();
        }
      }
      return verify_tour(cost, n, actions);
    }
    case ProblemKind::kAtsp:
      return verify_tour(inst.atsp().dist, n, actions);

    case ProblemKind::kCvrp: {
      const auto& d = inst.cvrp();
      if (actions.empty()) return fail("empty route");
      if (actions.front() == 0) return fail("route starts with empty subtour");
      if (actions.back() == 0) return fail("route ends with a depot stop");
      std::vector<char> seen(n, 0);
      double length = 0.0;
      double load = 0.0;
      Eigen::RowVector2d pos = d.depot;
      bool at_depot = true;
      for (int v : actions) {
        if (v < 0 || v > n) return fail("location index out of range");
        if (v == 0) {
          if (at_depot) return fail("consecutive depot stops");
          length += dist(pos, d.depot);
          pos = d.depot;
          load = 0.0;
          at_depot = true;
          continue;
        }
        if (seen[v - 1]) return fail("customer revisited");
        seen[v - 1] = 1;
        load += d.demands(v - 1);
        if (load > d.capacity) return fail("capacity exceeded");
        length += dist(pos, d.coords.row(v - 1));
        pos = d.coords.row(v - 1);
        at_depot = false;
      }
      if (std::count(seen.begin(), seen.end(), 1) != n) {
        return fail("not all customers visited");
      }
      length += dist(pos, d.depot);
      return ok(length);
    }

    case ProblemKind::kOp: {
      const auto& d = inst.op();
      if (actions.empty() || actions.back() != 0) {
        return fail("tour must end with a depot return");
      }
      std::vector<char> seen(n, 0);
      double length = 0.0;
      double prize = 0.0;
      Eigen::RowVector2d pos = d.depot;
      for (std::size_t i = 0; i + 1 < actions.size(); ++i) {
        const int v = actions[i];
        if (v <= 0 || v > n) return fail("depot visit before the end");
        if (seen[v - 1]) return fail("node revisited");
        seen[v - 1] = 1;
        length += dist(pos, d.coords.row(v - 1));
        pos = d.coords.row(v - 1);
        prize += d.prizes(v - 1);
      }
      length += dist(pos, d.depot);
      if (length > d.length_limit + kTol) return fail("length limit exceeded");
      return ok(prize);
    }

    case ProblemKind::kPctsp:
    case ProblemKind::kSpctsp: {
      const bool stochastic = inst.kind == ProblemKind::kSpctsp;
      const auto& depot =
          stochastic ? inst.spctsp().depot : inst.pctsp().depot;
      const auto& coords =
          stochastic ? inst.spctsp().coords : inst.pctsp().coords;
      const auto& prizes =
          stochastic ? inst.spctsp().realized : inst.pctsp().prizes;
      const auto& penalties =
          stochastic ? inst.spctsp().penalties : inst.pctsp().penalties;
      const double min_prize =
          stochastic ? inst.spctsp().min_prize : inst.pctsp().min_prize;
      if (actions.empty() || actions.back() != 0) {
        return fail("tour must end with a depot return");
      }
      std::vector<char> seen(n, 0);
      double length = 0.0;
      double prize = 0.0;
      Eigen::RowVector2d pos = depot;
      for (std::size_t i = 0; i + 1 < actions.size(); ++i) {
        const int v = actions[i];
        if (v <= 0 || v > n) return fail("depot visit before the end");
        if (seen[v - 1]) return fail("node revisited");
        seen[v - 1] = 1;
        length += dist(pos, coords.row(v - 1));
        pos = coords.row(v - 1);
        prize += prizes(v - 1);
      }
      length += dist(pos, depot);
      const int visited = static_cast<int>(actions.size()) - 1;
      if (prize < min_prize - kTol && visited != n) {
        return fail("minimum prize not collected");
      }
      double penalty = 0.0;
      for (int i = 0; i < n; ++i) {
        if (!seen[i]) penalty += penalties(i);
      }
      return ok(length + penalty);
    }

    case ProblemKind::kKnapsack: {
      const auto& d = inst.knapsack();
      if (actions.empty() || actions.back() != n) {
        return fail("selection must end with terminate");
      }
      std::vector<char> seen(n, 0);
      double volume = 0.0;
      double value = 0.0;
      for (std::size_t i = 0; i + 1 < actions.size(); ++i) {
        const int v = actions[i];
        if (v < 0 || v >= n) return fail("terminate before the end");
        if (seen[v]) return fail("item reselected");
        seen[v] = 1;
        volume += d.volumes(v);
        value += d.values(v);
      }
      if (volume > d.capacity + kTol) return fail("capacity exceeded");
      return ok(value);
    }

    case ProblemKind::kMis: {
      const auto& adj = inst.mis().adjacency;
      std::vector<char> in_set(n, 0);
      for (int v : actions) {
        if (v < 0 || v >= n) return fail("node index out of range");
        if (in_set[v]) return fail("node reselected");
        in_set[v] = 1;
      }
      for (int u = 0; u < n; ++u) {
        if (!in_set[u]) continue;
        for (int v = u + 1; v < n; ++v) {
          if (in_set[v] && adj(u, v) != 0) return fail("adjacent pair selected");
        }
      }
      // Completeness: the set must be maximal, i.e. every outside node has a
      // selected neighbor.
      for (int u = 0; u < n; ++u) {
        if (in_set[u]) continue;
        bool blocked = false;
        for (int v = 0; v < n && !blocked; ++v) {
          blocked = in_set[v] && adj(u, v) != 0;
        }
        if (!blocked) return fail("independent set not maximal");
      }
      return ok(static_cast<double>(actions.size()));
    }
  }
  return fail("unknown problem kind");
}

}  // namespace seqco::problems
