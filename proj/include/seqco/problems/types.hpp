#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "seqco/common.hpp"

namespace seqco::problems {

enum class ProblemKind : std::uint8_t {
  kTsp = 0,
  kCvrp,
  kOp,
  kPctsp,
  kSpctsp,
  kKnapsack,
  kAtsp,
  kMis,
};

inline constexpr int kNumProblemKinds = 8;

const char* kind_name(ProblemKind kind);
ProblemKind kind_from_name(const std::string& name);

/// Whether the objective is minimized (routing) or maximized (selection).
enum class Sense : std::uint8_t { kMin, kMax };
Sense objective_sense(ProblemKind kind);

// --- per-kind static payloads -------------------------------------------

struct TspData {
  Points coords;  // n x 2, unit square
};

struct CvrpData {
  Eigen::RowVector2d depot;
  Points coords;                 // customers, n x 2
  Eigen::VectorXi demands;       // in {1..9}
  int capacity = 0;
};

struct OpData {
  Eigen::RowVector2d depot;
  Points coords;
  Eigen::VectorXd prizes;        // normalized to (0, 1]
  double length_limit = 0.0;
};

struct PctspData {
  Eigen::RowVector2d depot;
  Points coords;
  Eigen::VectorXd prizes;        // rho_i >= 0
  Eigen::VectorXd penalties;     // beta_i >= 0
  double min_prize = 1.0;
};

struct SpctspData {
  Eigen::RowVector2d depot;
  Points coords;
  Eigen::VectorXd expected;      // visible before visiting
  Eigen::VectorXd realized;      // revealed only on visit
  Eigen::VectorXd penalties;
  double min_prize = 1.0;
};

struct KnapsackData {
  Eigen::VectorXd values;        // in [2, 20]
  Eigen::VectorXd volumes;       // k_i in {0.5 v_i, 1.5 v_i}
  double capacity = 0.0;
};

struct AtspData {
  Eigen::MatrixXd dist;          // n x n, zero diagonal
};

struct MisData {
  Eigen::MatrixXi adjacency;     // n x n, symmetric 0/1, zero diagonal
};

using Payload = std::variant<TspData, CvrpData, OpData, PctspData, SpctspData,
                             KnapsackData, AtspData, MisData>;

struct ProblemInstance {
  ProblemKind kind{};
  std::int32_t n = 0;
  std::int64_t seed = 0;
  Payload payload;

  const TspData& tsp() const { return std::get<TspData>(payload); }
  const CvrpData& cvrp() const { return std::get<CvrpData>(payload); }
  const OpData& op() const { return std::get<OpData>(payload); }
  const PctspData& pctsp() const { return std::get<PctspData>(payload); }
  const SpctspData& spctsp() const { return std::get<SpctspData>(payload); }
  const KnapsackData& knapsack() const { return std::get<KnapsackData>(payload); }
  const AtspData& atsp() const { return std::get<AtspData>(payload); }
  const MisData& mis() const { return std::get<MisData>(payload); }
};

// --- action masks ----------------------------------------------------------

/// Bitset over the action space of one state.
class ActionMask {
 public:
  ActionMask() = default;
  explicit ActionMask(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void clear(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  int count() const;
  bool any() const;
  bool none() const { return !any(); }
  /// Indices of set bits, ascending.
  std::vector<int> set_bits() const;

  friend bool operator==(const ActionMask&, const ActionMask&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

// --- MDP state --------------------------------------------------------------

/// Node decision status for MIS states.
enum NodeStatus : std::uint8_t { kUndecided = 0, kSelected = 1, kExcluded = 2 };

/// Partial solution plus the dynamic observations derived from it.
///
/// Only the fields relevant to the instance kind are maintained; everything
/// is recomputed identically when the same history is replayed, so states are
/// bit-for-bit reproducible from (instance, history).
struct MdpState {
  std::vector<std::int32_t> history;
  bool terminal = false;

  // Routing kinds: location ids (0 = depot for kinds that have one,
  // node index for TSP/ATSP). -1 before TSP/ATSP pick their start node.
  std::int32_t current = -1;
  std::vector<std::uint8_t> visited;  // customers/nodes/items
  std::int32_t visited_count = 0;

  double remaining_capacity = 0.0;  // CVRP, raw demand units
  double remaining_length = 0.0;    // OP
  double collected_prize = 0.0;     // OP / PCTSP / SPCTSP (realized)
  double tour_length = 0.0;         // running length for routing kinds
  double remaining_volume = 0.0;    // knapsack
  double collected_value = 0.0;     // knapsack
  std::vector<std::uint8_t> node_status;  // MIS
};

}  // namespace seqco::problems
