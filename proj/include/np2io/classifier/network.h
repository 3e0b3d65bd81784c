// Copyright 2026 The np2io Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NP2IO_CLASSIFIER_NETWORK_H_
#define NP2IO_CLASSIFIER_NETWORK_H_

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "np2io/classifier/model_config.h"
#include "np2io/classifier/safetensors.h"
#include "np2io/common/rng.h"
#include "np2io/corpus/label.h"
#include "np2io/spans/eligible.h"

namespace np2io {

template <typename S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

// Weight is (out, in): y = x * weight^T + bias.
template <typename S>
struct LinearParams {
  Matrix<S> weight;
  RowVector<S> bias;
};

template <typename S>
struct LayerNormParams {
  RowVector<S> weight;
  RowVector<S> bias;
};

template <typename S>
struct BlockParams {
  LinearParams<S> q, k, v, out;
  LayerNormParams<S> sa_norm;
  LinearParams<S> lin1, lin2;
  LayerNormParams<S> out_norm;
};

template <typename S>
struct MlmHeadParams {
  LinearParams<S> transform;
  LayerNormParams<S> norm;
  LinearParams<S> projector;
};

template <typename S>
struct ModelParams {
  EncoderConfig config;
  Matrix<S> word_embeddings;
  Matrix<S> position_embeddings;
  LayerNormParams<S> embedding_norm;
  std::vector<BlockParams<S>> blocks;
  LinearParams<S> classifier;  // (kNumLabels, dim)
  std::optional<MlmHeadParams<S>> mlm;
};

// Gradients for the trainable part: the top `blocks.size()` blocks and the head.
template <typename S>
struct TrainableGrads {
  std::vector<BlockParams<S>> blocks;
  LinearParams<S> classifier;
};

// Flat view of one parameter tensor, used by the optimizer and serialization.
template <typename S>
struct ParamView {
  std::string name;
  S* data;
  int64_t rows;
  int64_t cols;
  bool is_vector;
  int64_t size() const { return rows * cols; }
};

// Normal(0, 0.02) weights, zero biases, unit LayerNorm gains.
template <typename S>
ModelParams<S> InitModelParams(const EncoderConfig& config, uint64_t seed, bool with_mlm_head);

// Head re-initialization leaves the encoder untouched.
template <typename S>
void InitClassifierHead(ModelParams<S>& params, uint64_t seed);

template <typename S>
TrainableGrads<S> ZeroGrads(const ModelParams<S>& params, int trainable_layers);

// All tensors with their Hugging Face DistilBERT names.
template <typename S>
std::vector<ParamView<S>> AllViews(ModelParams<S>& params);
// Views over the top `trainable_layers` blocks and the head, in the same
// order as GradViews.
template <typename S>
std::vector<ParamView<S>> TrainableViews(ModelParams<S>& params, int trainable_layers);
template <typename S>
std::vector<ParamView<S>> GradViews(TrainableGrads<S>& grads, int first_layer);

template <typename S>
TensorFile ParamsToTensors(ModelParams<S>& params);
// Missing classifier tensors are initialized from `head_seed` and reported
// through `head_initialized`. Missing encoder tensors throw IoError.
template <typename S>
ModelParams<S> ParamsFromTensors(const EncoderConfig& config, const TensorFile& file,
                                 uint64_t head_seed, bool* head_initialized = nullptr);

template <typename S>
struct LayerNormCache {
  Matrix<S> xhat;
  Eigen::Matrix<S, Eigen::Dynamic, 1> inv_std;
};

template <typename S>
struct BlockCache {
  Matrix<S> input, q, k, v;
  std::vector<Matrix<S>> probs;       // per head, before dropout
  std::vector<Matrix<S>> attn_masks;  // per head; empty in evaluation mode
  Matrix<S> context;
  LayerNormCache<S> sa_norm;
  Matrix<S> sa_out;
  Matrix<S> ff_pre;
  Matrix<S> ff_act;
  Matrix<S> ffn_mask;
  LayerNormCache<S> out_norm;
};

struct ForwardOptions {
  Rng* dropout_rng = nullptr;  // null selects evaluation mode
  int cache_layers = 0;        // keep caches for this many top blocks
};

template <typename S>
struct ForwardState {
  Matrix<S> hidden;  // (L, dim) final encoder output
  std::vector<BlockCache<S>> caches;
  Matrix<S> head_input;  // hidden after head dropout
  Matrix<S> head_mask;   // empty in evaluation mode
  Matrix<S> logits;      // (L, kNumLabels)
};

// Runs embeddings, blocks and the token head. Throws ContractViolation for
// sequences longer than the position table or out-of-vocabulary ids.
template <typename S>
ForwardState<S> Forward(const ModelParams<S>& params, std::span<const int32_t> ids,
                        const ForwardOptions& options = {});

template <typename S>
Matrix<S> SoftmaxRows(const Matrix<S>& logits);

// Sum over eligible tokens of -log softmax(logits_i)[gold], and its
// gradient w.r.t. the logits (zero rows for non-eligible tokens).
template <typename S>
S EligibleCrossEntropy(const Matrix<S>& logits, const EligibleTokenSet& eligible, Label gold,
                       Matrix<S>* dlogits);

// Accumulates (+=) parameter gradients for the cached top blocks and head.
template <typename S>
void Backward(const ModelParams<S>& params, const ForwardState<S>& state,
              const Matrix<S>& dlogits, TrainableGrads<S>& grads);

// Masked-LM logits (L, vocab) from encoder output; requires params.mlm.
template <typename S>
Matrix<S> MlmLogits(const ModelParams<S>& params, const Matrix<S>& hidden);

}  // namespace np2io

#endif  // NP2IO_CLASSIFIER_NETWORK_H_
