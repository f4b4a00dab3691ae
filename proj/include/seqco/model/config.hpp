#pragma once

#include <cstdint>
#include <string>

#include "seqco/common.hpp"
#include "seqco/tokenizer/vocab.hpp"

namespace seqco::model {

/// Decoder backbone shape. Pre-norm RMS blocks, rotary global positions,
/// learned local position table, gated feed-forward.
struct ModelConfig {
  int layers = 10;
  int embed_dim = 768;
  int q_heads = 8;
  int kv_heads = 8;
  int ffn_hidden = 2048;
  int vocab_size = tok::VocabSpec::kVocabSize;
  int max_len = 1000;  // L
  double norm_eps = 1e-6;
  double rope_theta = 10000.0;
  /// Project per-step action feasibility onto prefix attention (training and
  /// inference both honor it).
  bool prefix_feasibility_masking = true;

  int head_dim() const { return embed_dim / q_heads; }
  int kv_dim() const { return kv_heads * head_dim(); }

  void validate() const;

  /// Published reference shape: 10 layers, 768 dims, 8/8 heads, L = 1000.
  static ModelConfig base();
  /// CPU-trainable profile: 4 layers, 128 dims, L = 256.
  static ModelConfig desk();
  static ModelConfig preset(const std::string& name);
};

}  // namespace seqco::model
