#pragma once

#include "seqco/problems/types.hpp"

namespace seqco::problems {

struct GenerateOptions {
  /// Multiplies each directed ATSP arc by U(0.8, 1.2); off by default so the
  /// matrix stays the Euclidean one.
  bool atsp_noise = false;
  /// Erdos-Renyi edge probability for MIS graphs.
  double mis_edge_prob = 0.3;
};

/// Deterministic instance generation: same (kind, n, seed) always produces a
/// byte-identical instance. Throws `invalid-size` for n < 2.
ProblemInstance generate_instance(ProblemKind kind, int n, std::int64_t seed,
                                  const GenerateOptions& options = {});

/// Scale-dependent constants from the published generation schemes.
int cvrp_capacity(int n);        // 30 at n<=20, 40 at n<=50
double op_length_limit(int n);   // 2 at n<=20, 3 at n<=50
double pctsp_penalty_k(int n);   // 2 at n<=20, 3 at n<=50
double knapsack_capacity(int n); // 30 at n<=20, 75 at n<=50

}  // namespace seqco::problems
