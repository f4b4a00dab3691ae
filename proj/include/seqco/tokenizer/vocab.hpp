#pragma once

#include <cmath>
#include <cstdint>

#include "seqco/common.hpp"

namespace seqco::tok {

using TokenId = std::int32_t;

/// Fixed vocabulary layout shared by every model and dataset in the stack.
///
/// Discrete values occupy [0, 200); mu-law-binned continuous values occupy
/// [200, 2000); two splitter tokens and a pad token close out the range.
/// These constants are serialized into every checkpoint sidecar and must
/// match at load time.
struct VocabSpec {
  static constexpr TokenId kDiscreteMin = 0;
  static constexpr TokenId kDiscreteMax = 200;   // exclusive
  static constexpr TokenId kContinuousMin = 200;
  static constexpr TokenId kContinuousMax = 2000;  // exclusive
  static constexpr TokenId kActionSplit = 2000;
  static constexpr TokenId kPrefixSplit = 2001;
  static constexpr TokenId kPad = 2002;
  static constexpr TokenId kVocabSize = 2003;

  static constexpr double kMuLawM = 4.0;
  static constexpr double kMuLawMu = 15.0;
  static constexpr int kNumBins = kContinuousMax - kContinuousMin;  // 1800
};

static_assert(VocabSpec::kNumBins == 1800);

/// Mu-law companding: F(x) = sgn(x) * log(|x|*mu + 1) / log(M*mu + 1).
/// Inputs are clamped to [-M, M] first, so the output lies in [-1, 1].
inline double mu_law_encode(double x) {
  if (!std::isfinite(x)) {
    throw Error(errc::invalid_value, "mu_law_encode: non-finite input");
  }
  constexpr double m = VocabSpec::kMuLawM;
  constexpr double mu = VocabSpec::kMuLawMu;
  const double a = std::min(std::abs(x), m);
  const double y = std::log(a * mu + 1.0) / std::log(m * mu + 1.0);
  return x < 0.0 ? -y : y;
}

/// Inverse of mu_law_encode on [-1, 1].
inline double mu_law_decode(double y) {
  constexpr double m = VocabSpec::kMuLawM;
  constexpr double mu = VocabSpec::kMuLawMu;
  const double a = (std::exp(std::abs(y) * std::log(m * mu + 1.0)) - 1.0) / mu;
  return y < 0.0 ? -a : a;
}

/// Bin a continuous value: uniform bins over the transformed range [-1, 1],
/// floor assignment, top edge clamped into the last bin.
inline TokenId continuous_to_token(double x) {
  const double f = mu_law_encode(x);
  const double scaled = (f + 1.0) * 0.5 * VocabSpec::kNumBins;
  int bin = static_cast<int>(std::floor(scaled));
  bin = std::max(0, std::min(VocabSpec::kNumBins - 1, bin));
  return VocabSpec::kContinuousMin + bin;
}

/// Bin-center decode for inspection and tests.
inline double token_to_continuous(TokenId id) {
  if (id < VocabSpec::kContinuousMin || id >= VocabSpec::kContinuousMax) {
    throw Error(errc::range, "token_to_continuous: id outside continuous range");
  }
  const int bin = id - VocabSpec::kContinuousMin;
  const double center = -1.0 + (bin + 0.5) * (2.0 / VocabSpec::kNumBins);
  return mu_law_decode(center);
}

inline TokenId discrete_to_token(std::int64_t v) {
  if (v < VocabSpec::kDiscreteMin || v >= VocabSpec::kDiscreteMax) {
    throw Error(errc::range, "discrete_to_token: value outside [0, 200)");
  }
  return static_cast<TokenId>(v);
}

/// Round-half-even integerization for discrete-tagged values that arrive as
/// reals (knapsack volumes and budgets).
inline std::int64_t round_half_even(double v) {
  const double r = std::nearbyint(v);  // default FE_TONEAREST is half-even
  return static_cast<std::int64_t>(r);
}

inline TokenId discrete_value_to_token(double v) {
  if (!std::isfinite(v)) {
    throw Error(errc::invalid_value, "discrete token: non-finite value");
  }
  return discrete_to_token(round_half_even(v));
}

}  // namespace seqco::tok
