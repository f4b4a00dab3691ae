#include "seqco/problems/generate.hpp"

#include <cmath>

#include "seqco/rng.hpp"

namespace seqco::problems {

namespace {

Points sample_points(Rng& rng, int n) {
  Points pts(n, 2);
  for (int i = 0; i < n; ++i) {
    pts(i, 0) = rng.uniform01();
    pts(i, 1) = rng.uniform01();
  }
  return pts;
}

Eigen::RowVector2d sample_point(Rng& rng) {
  Eigen::RowVector2d p;
  p(0) = rng.uniform01();
  p(1) = rng.uniform01();
  return p;
}

double round2(double v) { return std::nearbyint(v * 100.0) / 100.0; }

Eigen::VectorXd prize_draw(Rng& rng, int n) {
  Eigen::VectorXd rho(n);
  for (int i = 0; i < n; ++i) rho(i) = rng.uniform01() * 4.0 / n;
  return rho;
}

}  // namespace

int cvrp_capacity(int n) { return n <= 20 ? 30 : (n <= 50 ? 40 : 50); }
double op_length_limit(int n) { return n <= 20 ? 2.0 : (n <= 50 ? 3.0 : 4.0); }
double pctsp_penalty_k(int n) { return n <= 20 ? 2.0 : (n <= 50 ? 3.0 : 4.0); }
double knapsack_capacity(int n) {
  return n <= 20 ? 30.0 : (n <= 50 ? 75.0 : 1.5 * n);
}

ProblemInstance generate_instance(ProblemKind kind, int n, std::int64_t seed,
                                  const GenerateOptions& options) {
  if (n < 2) {
    throw Error(errc::invalid_size, "instance size must be at least 2");
  }
  Rng rng(hash_combine(static_cast<std::uint64_t>(seed),
                       static_cast<std::uint64_t>(kind)));
  ProblemInstance inst;
  inst.kind = kind;
  inst.n = n;
  inst.seed = seed;

  switch (kind) {
    case ProblemKind::kTsp: {
      inst.payload = TspData{sample_points(rng, n)};
      break;
    }
    case ProblemKind::kCvrp: {
      CvrpData d;
      d.depot = sample_point(rng);
      d.coords = sample_points(rng, n);
      d.demands.resize(n);
      for (int i = 0; i < n; ++i) {
        d.demands(i) = static_cast<int>(rng.uniform_int(1, 9));
      }
      d.capacity = cvrp_capacity(n);
      inst.payload = std::move(d);
      break;
    }
    case ProblemKind::kOp: {
      OpData d;
      d.depot = sample_point(rng);
      d.coords = sample_points(rng, n);
      Eigen::VectorXd dist0(n);
      for (int i = 0; i < n; ++i) dist0(i) = (d.coords.row(i) - d.depot).norm();
      const double dmax = dist0.maxCoeff();
      d.prizes.resize(n);
      for (int i = 0; i < n; ++i) {
        // p_i = 1 + floor(99 * d_0i / max_j d_0j), normalized by 100.
        const int p = 1 + static_cast<int>(std::floor(99.0 * dist0(i) / dmax));
        d.prizes(i) = p / 100.0;
      }
      d.length_limit = op_length_limit(n);
      inst.payload = std::move(d);
      break;
    }
    case ProblemKind::kPctsp: {
      PctspData d;
      d.depot = sample_point(rng);
      d.coords = sample_points(rng, n);
      d.prizes = prize_draw(rng, n);
      const double k = pctsp_penalty_k(n);
      d.penalties.resize(n);
      for (int i = 0; i < n; ++i) {
        d.penalties(i) = rng.uniform01() * 3.0 * k / n;
      }
      d.min_prize = 1.0;
      inst.payload = std::move(d);
      break;
    }
    case ProblemKind::kSpctsp: {
      SpctspData d;
      d.depot = sample_point(rng);
      d.coords = sample_points(rng, n);
      d.expected = prize_draw(rng, n);
      d.realized = prize_draw(rng, n);
      const double k = pctsp_penalty_k(n);
      d.penalties.resize(n);
      for (int i = 0; i < n; ++i) {
        d.penalties(i) = rng.uniform01() * 3.0 * k / n;
      }
      d.min_prize = 1.0;
      inst.payload = std::move(d);
      break;
    }
    case ProblemKind::kKnapsack: {
      KnapsackData d;
      d.values.resize(n);
      d.volumes.resize(n);
      for (int i = 0; i < n; ++i) {
        // Even integer values in [2, 20] keep volumes (0.5 or 1.5 times the
        // value) exactly integral, matching the discrete token design.
        d.values(i) = 2.0 * static_cast<double>(rng.uniform_int(1, 10));
        const double t = rng.coin() ? 0.5 : -0.5;
        d.volumes(i) = round2((1.0 + t) * d.values(i));
      }
      d.capacity = knapsack_capacity(n);
      inst.payload = std::move(d);
      break;
    }
    case ProblemKind::kAtsp: {
      AtspData d;
      const Points pts = sample_points(rng, n);
      d.dist.resize(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          d.dist(i, j) = i == j ? 0.0 : (pts.row(i) - pts.row(j)).norm();
        }
      }
      if (options.atsp_noise) {
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (i != j) d.dist(i, j) *= rng.uniform(0.8, 1.2);
          }
        }
      }
      inst.payload = std::move(d);
      break;
    }
    case ProblemKind::kMis: {
      MisData d;
      d.adjacency = Eigen::MatrixXi::Zero(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (rng.uniform01() < options.mis_edge_prob) {
            d.adjacency(i, j) = 1;
            d.adjacency(j, i) = 1;
          }
        }
      }
      inst.payload = std::move(d);
      break;
    }
  }
  return inst;
}

}  // namespace seqco::problems
