#include "seqco/problems/types.hpp"

#include <bit>

namespace seqco::problems {

const char* kind_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kTsp: return "tsp";
    case ProblemKind::kCvrp: return "cvrp";
    case ProblemKind::kOp: return "op";
    case ProblemKind::kPctsp: return "pctsp";
    case ProblemKind::kSpctsp: return "spctsp";
    case ProblemKind::kKnapsack: return "knapsack";
    case ProblemKind::kAtsp: return "atsp";
    case ProblemKind::kMis: return "mis";
  }
  throw Error(errc::invalid_value, "unknown problem kind");
}

ProblemKind kind_from_name(const std::string& name) {
  for (int k = 0; k < kNumProblemKinds; ++k) {
    const auto kind = static_cast<ProblemKind>(k);
    if (name == kind_name(kind)) return kind;
  }
  throw Error(errc::config, "unknown problem kind: " + name);
}

Sense objective_sense(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kTsp:
    case ProblemKind::kCvrp:
    case ProblemKind::kPctsp:
    case ProblemKind::kSpctsp:
    case ProblemKind::kAtsp:
      return Sense::kMin;
    case ProblemKind::kOp:
    case ProblemKind::kKnapsack:
    case ProblemKind::kMis:
      return Sense::kMax;
  }
  throw Error(errc::invalid_value, "unknown problem kind");
}

int ActionMask::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool ActionMask::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::vector<int> ActionMask::set_bits() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int i = 0; i < size_; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

}  // namespace seqco::problems
