#pragma once

#include <span>
#include <type_traits>
#include <vector>

#include "seqco/dataset/record.hpp"
#include "seqco/model/config.hpp"
#include "seqco/model/mask.hpp"

namespace seqco::model {

/// Offsets of every parameter block inside one flat vector. Keeping the
/// parameters flat makes the optimizer, checkpointing and finite-difference
/// probing one-dimensional.
struct ParamLayout {
  struct Layer {
    Index ln1, wq, wk, wv, wo, ln2, w_gate, w_up, w_down;
  };
  int d = 0, dkv = 0, f = 0, vocab = 0, max_len = 0, head_dim = 0;
  Index tok_emb = 0, pos_emb = 0, final_ln = 0, w_out = 0;
  std::vector<Layer> layers;
  Index total = 0;

  explicit ParamLayout(const ModelConfig& cfg);
  ParamLayout() = default;
};

/// Typed windows into a flat parameter (or gradient) vector.
template <typename MaybeConstScalar>
struct ParamSlices {
  using Scalar = std::remove_const_t<MaybeConstScalar>;
  using Mat = std::conditional_t<std::is_const_v<MaybeConstScalar>,
                                 Eigen::Map<const MatrixX<Scalar>>,
                                 Eigen::Map<MatrixX<Scalar>>>;
  using Vec = std::conditional_t<std::is_const_v<MaybeConstScalar>,
                                 Eigen::Map<const VectorX<Scalar>>,
                                 Eigen::Map<VectorX<Scalar>>>;

  MaybeConstScalar* base = nullptr;
  const ParamLayout* lay = nullptr;

  Mat tok_emb() const { return Mat(base + lay->tok_emb, lay->vocab, lay->d); }
  Mat pos_emb() const { return Mat(base + lay->pos_emb, lay->max_len, lay->d); }
  Vec ln1(int l) const { return Vec(base + lay->layers[l].ln1, lay->d); }
  Mat wq(int l) const { return Mat(base + lay->layers[l].wq, lay->d, lay->d); }
  Mat wk(int l) const { return Mat(base + lay->layers[l].wk, lay->d, lay->dkv); }
  Mat wv(int l) const { return Mat(base + lay->layers[l].wv, lay->d, lay->dkv); }
  Mat wo(int l) const { return Mat(base + lay->layers[l].wo, lay->d, lay->d); }
  Vec ln2(int l) const { return Vec(base + lay->layers[l].ln2, lay->d); }
  Mat w_gate(int l) const {
    return Mat(base + lay->layers[l].w_gate, lay->d, lay->f);
  }
  Mat w_up(int l) const {
    return Mat(base + lay->layers[l].w_up, lay->d, lay->f);
  }
  Mat w_down(int l) const {
    return Mat(base + lay->layers[l].w_down, lay->f, lay->d);
  }
  Vec final_ln() const { return Vec(base + lay->final_ln, lay->d); }
  Mat w_out() const { return Mat(base + lay->w_out, lay->d, lay->vocab); }
};

/// Non-causal decoder-only sequence model over the fixed vocabulary.
/// Scalar is float for training/inference and double for numeric checks.
template <typename Scalar>
class SequenceModel {
 public:
  explicit SequenceModel(const ModelConfig& cfg)
      : cfg_(cfg), layout_(cfg), flat_(VectorX<Scalar>::Zero(layout_.total)) {
    cfg_.validate();
  }

  const ModelConfig& config() const { return cfg_; }
  const ParamLayout& layout() const { return layout_; }
  Index param_count() const { return layout_.total; }

  VectorX<Scalar>& flat() { return flat_; }
  const VectorX<Scalar>& flat() const { return flat_; }

  ParamSlices<Scalar> params() { return {flat_.data(), &layout_}; }
  ParamSlices<const Scalar> params() const { return {flat_.data(), &layout_}; }

  /// Gaussian init, output projections damped by depth, norm gains at one.
  void init_params(std::uint64_t seed);

 private:
  ModelConfig cfg_;
  ParamLayout layout_;
  VectorX<Scalar> flat_;
};

enum class Stage : std::uint8_t { kDynamics, kPolicy };

/// Next-token logits for every position: rows are (record, position) in
/// record-major order, columns the vocabulary. `eff_len` limits computation
/// to the first eff_len positions (trailing all-pad columns contribute
/// nothing); -1 means the full record length.
template <typename Scalar>
MatrixX<Scalar> forward(const SequenceModel<Scalar>& m,
                        const data::Batch& batch, int eff_len = -1);

template <typename Scalar>
struct LossOutput {
  double loss = 0.0;
  Index target_count = 0;
  VectorX<Scalar> grad;  // parameter-shaped; empty when not requested
};

/// Mean masked next-token NLL of the stage's targets, with an optional full
/// backward pass. A batch whose mask selects nothing reports target_count 0
/// (skip signal, not an error).
template <typename Scalar>
LossOutput<Scalar> stage_loss(const SequenceModel<Scalar>& m,
                              const data::Batch& batch, Stage stage,
                              bool with_grad, int eff_len = -1);

/// Fraction of stage targets whose argmax prediction matches.
template <typename Scalar>
double masked_accuracy(const SequenceModel<Scalar>& m,
                       const data::Batch& batch, Stage stage,
                       int eff_len = -1);

// --- incremental decoding ---------------------------------------------------

/// Per-layer key/value rows of all processed positions. Append-only: prefix
/// feasibility is applied as a per-query score bias, never by rewriting
/// cached entries.
template <typename Scalar>
class DecodeCache {
 public:
  explicit DecodeCache(const ModelConfig& cfg);

  int len() const { return len_; }
  int prefix_len() const { return prefix_len_; }
  /// Marks the first `n` cached positions as the instance prefix.
  void set_prefix_len(int n) { prefix_len_ = n; }
  void reset() {
    len_ = 0;
    prefix_len_ = 0;
  }

  MatrixX<Scalar>& keys(int layer) { return k_[layer]; }
  MatrixX<Scalar>& values(int layer) { return v_[layer]; }
  const MatrixX<Scalar>& keys(int layer) const { return k_[layer]; }
  const MatrixX<Scalar>& values(int layer) const { return v_[layer]; }
  void advance(int n) { len_ += n; }

 private:
  int len_ = 0;
  int prefix_len_ = 0;
  std::vector<MatrixX<Scalar>> k_, v_;
};

struct ChunkOptions {
  /// Queries of this chunk attend to the whole chunk (used when prefilling
  /// the bidirectional prefix); otherwise within-chunk attention is causal.
  bool bidirectional_within_chunk = false;
  /// Sorted prefix key positions hidden from every query in this chunk.
  std::span<const std::int32_t> masked_prefix_keys = {};
};

/// Extends the cache with new tokens and returns their next-token logits
/// (rows match the chunk). `global_pos` must continue the cache exactly;
/// anything else is a `cache-order` error. Empty chunks return zero rows.
template <typename Scalar>
MatrixX<Scalar> forward_incremental(const SequenceModel<Scalar>& m,
                                    DecodeCache<Scalar>& cache,
                                    std::span<const std::int32_t> ids,
                                    std::span<const std::int32_t> local_pos,
                                    std::span<const std::int32_t> global_pos,
                                    const ChunkOptions& options = {});

extern template class SequenceModel<float>;
extern template class SequenceModel<double>;
extern template class DecodeCache<float>;
extern template class DecodeCache<double>;
extern template MatrixX<float> forward(const SequenceModel<float>&,
                                       const data::Batch&, int);
extern template MatrixX<double> forward(const SequenceModel<double>&,
                                        const data::Batch&, int);
extern template LossOutput<float> stage_loss(const SequenceModel<float>&,
                                             const data::Batch&, Stage, bool,
                                             int);
extern template LossOutput<double> stage_loss(const SequenceModel<double>&,
                                              const data::Batch&, Stage, bool,
                                              int);
extern template double masked_accuracy(const SequenceModel<float>&,
                                       const data::Batch&, Stage, int);
extern template double masked_accuracy(const SequenceModel<double>&,
                                       const data::Batch&, Stage, int);
extern template MatrixX<float> forward_incremental(
    const SequenceModel<float>&, DecodeCache<float>&,
    std::span<const std::int32_t>, std::span<const std::int32_t>,
    std::span<const std::int32_t>, const ChunkOptions&);
extern template MatrixX<double> forward_incremental(
    const SequenceModel<double>&, DecodeCache<double>&,
    std::span<const std::int32_t>, std::span<const std::int32_t>,
    std::span<const std::int32_t>, const ChunkOptions&);

}  // namespace seqco::model
