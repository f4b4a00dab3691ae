#include "seqco/problems/features.hpp"

#include <algorithm>

#include "seqco/problems/mdp.hpp"

namespace seqco::problems {

namespace {

using Tag = TaggedValue::Tag;

void push_cont(std::vector<TaggedValue>& out, double v) {
  out.push_back({Tag::kContinuous, v});
}
void push_disc(std::vector<TaggedValue>& out, double v) {
  out.push_back({Tag::kDiscrete, v});
}

void push_point(std::vector<TaggedValue>& out, const Eigen::RowVector2d& p) {
  push_cont(out, p(0));
  push_cont(out, p(1));
}

void push_points(std::vector<TaggedValue>& out, const Points& pts) {
  for (Index i = 0; i < pts.rows(); ++i) push_point(out, pts.row(i));
}

}  // namespace

int prefix_value_count(ProblemKind kind, int n) {
  switch (kind) {
    case ProblemKind::kTsp: return 2 * n;
    case ProblemKind::kCvrp: return 3 * n + 2;
    case ProblemKind::kOp: return 3 * n + 2;
    case ProblemKind::kPctsp: return 4 * n + 2;
    case ProblemKind::kSpctsp: return 4 * n + 2;
    case ProblemKind::kKnapsack: return 2 * n;
    case ProblemKind::kAtsp: return n * n;
    case ProblemKind::kMis: return n * n;
  }
  throw Error(errc::invalid_value, "unknown problem kind");
}

int state_value_count(ProblemKind kind, int n) {
  switch (kind) {
    case ProblemKind::kTsp: return 2;
    case ProblemKind::kCvrp: return 3;
    case ProblemKind::kOp: return 4;
    case ProblemKind::kPctsp: return 3;
    case ProblemKind::kSpctsp: return 3;
    case ProblemKind::kKnapsack: return 1;
    case ProblemKind::kAtsp: return n;
    case ProblemKind::kMis: return n;
  }
  throw Error(errc::invalid_value, "unknown problem kind");
}

std::vector<TaggedValue> static_prefix_values(const ProblemInstance& inst) {
  const int n = inst.n;
  std::vector<TaggedValue> out;
  out.reserve(static_cast<std::size_t>(prefix_value_count(inst.kind, n)));
  switch (inst.kind) {
    case ProblemKind::kTsp:
      push_points(out, inst.tsp().coords);
      break;
    case ProblemKind::kCvrp: {
      const auto& d = inst.cvrp();
      push_point(out, d.depot);
      push_points(out, d.coords);
      for (int i = 0; i < n; ++i) {
        push_cont(out, d.demands(i) / static_cast<double>(d.capacity));
      }
      break;
    }
    case ProblemKind::kOp: {
      const auto& d = inst.op();
      push_point(out, d.depot);
      push_points(out, d.coords);
      for (int i = 0; i < n; ++i) push_cont(out, d.prizes(i));
      break;
    }
    case ProblemKind::kPctsp: {
      const auto& d = inst.pctsp();
      push_point(out, d.depot);
      push_points(out, d.coords);
      for (int i = 0; i < n; ++i) push_cont(out, d.prizes(i));
      for (int i = 0; i < n; ++i) push_cont(out, d.penalties(i));
      break;
    }
    case ProblemKind::kSpctsp: {
      const auto& d = inst.spctsp();
      push_point(out, d.depot);
      push_points(out, d.coords);
      for (int i = 0; i < n; ++i) push_cont(out, d.expected(i));
      for (int i = 0; i < n; ++i) push_cont(out, d.penalties(i));
      break;
    }
    case ProblemKind::kKnapsack: {
      const auto& d = inst.knapsack();
      for (int i = 0; i < n; ++i) push_disc(out, d.values(i));
      for (int i = 0; i < n; ++i) push_disc(out, d.volumes(i));
      break;
    }
    case ProblemKind::kAtsp: {
      const auto& m = inst.atsp().dist;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) push_cont(out, m(i, j));
      }
      break;
    }
    case ProblemKind::kMis: {
      const auto& m = inst.mis().adjacency;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) push_disc(out, m(i, j));
      }
      break;
    }
  }
  return out;
}

std::vector<TaggedValue> state_step_values(const ProblemInstance& inst,
                                           const MdpState& s) {
  const int n = inst.n;
  std::vector<TaggedValue> out;
  out.reserve(static_cast<std::size_t>(state_value_count(inst.kind, n)));
  switch (inst.kind) {
    case ProblemKind::kTsp: {
      if (s.current < 0) {
        push_cont(out, 0.0);
        push_cont(out, 0.0);
      } else {
        push_point(out, inst.tsp().coords.row(s.current));
      }
      break;
    }
    case ProblemKind::kCvrp: {
      push_point(out, location(inst, s.current));
      push_cont(out, s.remaining_capacity / inst.cvrp().capacity);
      break;
    }
    case ProblemKind::kOp: {
      push_point(out, location(inst, s.current));
      push_cont(out, s.collected_prize);
      push_cont(out, s.remaining_length);
      break;
    }
    case ProblemKind::kPctsp:
    case ProblemKind::kSpctsp: {
      const double min_prize = inst.kind == ProblemKind::kPctsp
                                   ? inst.pctsp().min_prize
                                   : inst.spctsp().min_prize;
      push_point(out, location(inst, s.current));
      push_cont(out, std::max(0.0, min_prize - s.collected_prize));
      break;
    }
    case ProblemKind::kKnapsack: {
      push_disc(out, s.remaining_volume);
      break;
    }
    case ProblemKind::kAtsp: {
      const auto& m = inst.atsp().dist;
      for (int j = 0; j < n; ++j) {
        push_cont(out, s.current < 0 ? 0.0 : m(s.current, j));
      }
      break;
    }
    case ProblemKind::kMis: {
      for (int v = 0; v < n; ++v) {
        push_disc(out, static_cast<double>(s.node_status[v]));
      }
      break;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> prefix_spans_for_action(ProblemKind kind,
                                                         int n, int action) {
  switch (kind) {
    case ProblemKind::kTsp:
      return {{2 * action, 2 * action + 2}};
    case ProblemKind::kCvrp:
    case ProblemKind::kOp: {
      if (action == 0) return {{0, 2}};
      const int scalar = 2 * (n + 1) + (action - 1);
      return {{2 * action, 2 * action + 2}, {scalar, scalar + 1}};
    }
    case ProblemKind::kPctsp:
    case ProblemKind::kSpctsp: {
      if (action == 0) return {{0, 2}};
      const int prize = 2 * (n + 1) + (action - 1);
      const int penalty = 2 * (n + 1) + n + (action - 1);
      return {{2 * action, 2 * action + 2},
              {prize, prize + 1},
              {penalty, penalty + 1}};
    }
    case ProblemKind::kKnapsack: {
      if (action == n) return {};  // terminate has no static footprint
      return {{action, action + 1}, {n + action, n + action + 1}};
    }
    case ProblemKind::kAtsp:
    case ProblemKind::kMis:
      return {{n * action, n * action + n}};
  }
  throw Error(errc::invalid_value, "unknown problem kind");
}

}  // namespace seqco::problems
