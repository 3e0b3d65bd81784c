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

#include "np2io/classifier/network.h"

#include <cmath>

#include "np2io/common/errors.h"

namespace np2io {
namespace {

constexpr double kInitStd = 0.02;

template <typename S>
using Column = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <typename S>
void FillNormal(Matrix<S>& m, int64_t rows, int64_t cols, Rng& rng) {
  m.resize(rows, cols);
  for (int64_t i = 0; i < m.size(); ++i) m.data()[i] = static_cast<S>(kInitStd * rng.Normal());
}

template <typename S>
LinearParams<S> InitLinear(int64_t out, int64_t in, Rng& rng) {
  LinearParams<S> p;
  FillNormal(p.weight, out, in, rng);
  p.bias = RowVector<S>::Zero(out);
  return p;
}

template <typename S>
LayerNormParams<S> InitNorm(int64_t n) {
  return {RowVector<S>::Ones(n), RowVector<S>::Zero(n)};
}

template <typename S>
LinearParams<S> ZeroLinear(const LinearParams<S>& like) {
  return {Matrix<S>::Zero(like.weight.rows(), like.weight.cols()),
          RowVector<S>::Zero(like.bias.size())};
}

template <typename S>
LayerNormParams<S> ZeroNorm(const LayerNormParams<S>& like) {
  return {RowVector<S>::Zero(like.weight.size()), RowVector<S>::Zero(like.bias.size())};
}

template <typename S>
BlockParams<S> ZeroBlock(const BlockParams<S>& b) {
  return {ZeroLinear(b.q),      ZeroLinear(b.k),    ZeroLinear(b.v),
          ZeroLinear(b.out),    ZeroNorm(b.sa_norm), ZeroLinear(b.lin1),
          ZeroLinear(b.lin2),   ZeroNorm(b.out_norm)};
}

template <typename S>
void AddLinear(std::vector<ParamView<S>>& out, const std::string& name, LinearParams<S>& p) {
  out.push_back({name + ".weight", p.weight.data(), p.weight.rows(), p.weight.cols(), false});
  out.push_back({name + ".bias", p.bias.data(), 1, p.bias.size(), true});
}

template <typename S>
void AddNorm(std::vector<ParamView<S>>& out, const std::string& name, LayerNormParams<S>& p) {
  out.push_back({name + ".weight", p.weight.data(), 1, p.weight.size(), true});
  out.push_back({name + ".bias", p.bias.data(), 1, p.bias.size(), true});
}

std::string BlockPrefix(size_t i) {
  return "distilbert.transformer.layer." + std::to_string(i) + ".";
}

template <typename S>
void AddBlock(std::vector<ParamView<S>>& out, size_t index, BlockParams<S>& b) {
  const std::string p = BlockPrefix(index);
  AddLinear(out, p + "attention.q_lin", b.q);
  AddLinear(out, p + "attention.k_lin", b.k);
  AddLinear(out, p + "attention.v_lin", b.v);
  AddLinear(out, p + "attention.out_lin", b.out);
  AddNorm(out, p + "sa_layer_norm", b.sa_norm);
  AddLinear(out, p + "ffn.lin1", b.lin1);
  AddLinear(out, p + "ffn.lin2", b.lin2);
  AddNorm(out, p + "output_layer_norm", b.out_norm);
}

template <typename S>
Matrix<S> Linear(const Matrix<S>& x, const LinearParams<S>& p) {
  Matrix<S> y = x * p.weight.transpose();
  y.rowwise() += p.bias;
  return y;
}

template <typename S>
Matrix<S> LayerNorm(const Matrix<S>& x, const LayerNormParams<S>& p, double eps,
                    LayerNormCache<S>* cache) {
  const auto n = x.cols();
  Matrix<S> xhat(x.rows(), n);
  Column<S> inv_std(x.rows());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const S mean = x.row(r).mean();
    const RowVector<S> centered = x.row(r).array() - mean;
    const S var = centered.squaredNorm() / static_cast<S>(n);
    inv_std(r) = S(1) / std::sqrt(var + static_cast<S>(eps));
    xhat.row(r) = centered * inv_std(r);
  }
  Matrix<S> y = xhat.array().rowwise() * p.weight.array();
  y.rowwise() += p.bias;
  if (cache != nullptr) {
    cache->xhat = std::move(xhat);
    cache->inv_std = std::move(inv_std);
  }
  return y;
}

// Returns dx; accumulates parameter gradients.
template <typename S>
Matrix<S> LayerNormBackward(const Matrix<S>& dy, const LayerNormParams<S>& p,
                            const LayerNormCache<S>& cache, LayerNormParams<S>& grad) {
  grad.weight += (dy.array() * cache.xhat.array()).colwise().sum().matrix();
  grad.bias += dy.colwise().sum();
  const Matrix<S> dxhat = dy.array().rowwise() * p.weight.array();
  const auto n = static_cast<S>(dy.cols());
  Matrix<S> dx(dy.rows(), dy.cols());
  for (Eigen::Index r = 0; r < dy.rows(); ++r) {
    const S mean_d = dxhat.row(r).sum() / n;
    const S mean_dx = dxhat.row(r).dot(cache.xhat.row(r)) / n;
    dx.row(r) = (dxhat.row(r).array() - mean_d - cache.xhat.row(r).array() * mean_dx) *
                cache.inv_std(r);
  }
  return dx;
}

template <typename S>
Matrix<S> LinearBackward(const Matrix<S>& dy, const Matrix<S>& x, const LinearParams<S>& p,
                         LinearParams<S>& grad) {
  grad.weight.noalias() += dy.transpose() * x;
  grad.bias += dy.colwise().sum();
  return dy * p.weight;
}

template <typename S>
S Gelu(S x) {
  return S(0.5) * x * (S(1) + std::erf(x / std::sqrt(S(2))));
}

template <typename S>
S GeluGrad(S x) {
  const S cdf = S(0.5) * (S(1) + std::erf(x / std::sqrt(S(2))));
  const S pdf = std::exp(S(-0.5) * x * x) / std::sqrt(S(2) * S(M_PI));
  return cdf + x * pdf;
}

// Inverted dropout mask: entries 0 or 1/(1-p).
template <typename S>
Matrix<S> DropoutMask(Eigen::Index rows, Eigen::Index cols, double p, Rng& rng) {
  Matrix<S> mask(rows, cols);
  const S keep = static_cast<S>(1.0 / (1.0 - p));
  for (Eigen::Index i = 0; i < mask.size(); ++i) {
    mask.data()[i] = rng.UniformReal() < p ? S(0) : keep;
  }
  return mask;
}

template <typename S>
void SoftmaxInPlace(Matrix<S>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const S max = m.row(r).maxCoeff();
    m.row(r) = (m.row(r).array() - max).exp();
    m.row(r) /= m.row(r).sum();
  }
}

template <typename S>
Matrix<S> BlockForward(const BlockParams<S>& b, const EncoderConfig& config, const Matrix<S>& x,
                       Rng* rng, BlockCache<S>* cache) {
  const int64_t heads = config.n_heads;
  const int64_t dh = config.head_dim();
  const S scale = S(1) / std::sqrt(static_cast<S>(dh));
  const Eigen::Index len = x.rows();
  Matrix<S> q = Linear(x, b.q);
  Matrix<S> k = Linear(x, b.k);
  Matrix<S> v = Linear(x, b.v);
  Matrix<S> context(len, config.dim);
  if (cache != nullptr) {
    cache->probs.resize(heads);
    if (rng != nullptr) cache->attn_masks.resize(heads);
  }
  for (int64_t h = 0; h < heads; ++h) {
    const auto qh = q.middleCols(h * dh, dh);
    const auto kh = k.middleCols(h * dh, dh);
    const auto vh = v.middleCols(h * dh, dh);
    Matrix<S> probs = (qh * kh.transpose()) * scale;
    SoftmaxInPlace(probs);
    Matrix<S> used = probs;
    if (rng != nullptr && config.attention_dropout > 0) {
      Matrix<S> mask = DropoutMask<S>(len, len, config.attention_dropout, *rng);
      used = used.cwiseProduct(mask);
      if (cache != nullptr) cache->attn_masks[h] = std::move(mask);
    } else if (cache != nullptr && rng != nullptr) {
      cache->attn_masks[h] = Matrix<S>::Ones(len, len);
    }
    context.middleCols(h * dh, dh) = used * vh;
    if (cache != nullptr) cache->probs[h] = std::move(probs);
  }
  Matrix<S> attn = Linear(context, b.out);
  Matrix<S> sa_out =
      LayerNorm<S>(attn + x, b.sa_norm, config.layer_norm_eps, cache ? &cache->sa_norm : nullptr);
  Matrix<S> ff_pre = Linear(sa_out, b.lin1);
  Matrix<S> ff_act = ff_pre.unaryExpr([](S t) { return Gelu(t); });
  Matrix<S> ff_out = Linear(ff_act, b.lin2);
  if (rng != nullptr && config.dropout > 0) {
    Matrix<S> mask = DropoutMask<S>(ff_out.rows(), ff_out.cols(), config.dropout, *rng);
    ff_out = ff_out.cwiseProduct(mask);
    if (cache != nullptr) cache->ffn_mask = std::move(mask);
  }
  Matrix<S> y = LayerNorm<S>(ff_out + sa_out, b.out_norm, config.layer_norm_eps,
                             cache ? &cache->out_norm : nullptr);
  if (cache != nullptr) {
    cache->input = x;
    cache->q = std::move(q);
    cache->k = std::move(k);
    cache->v = std::move(v);
    cache->context = std::move(context);
    cache->sa_out = std::move(sa_out);
    cache->ff_pre = std::move(ff_pre);
    cache->ff_act = std::move(ff_act);
  }
  return y;
}

template <typename S>
void BlockBackward(const BlockParams<S>& b, const EncoderConfig& config,
                   const BlockCache<S>& c, const Matrix<S>& dy, BlockParams<S>& g,
                   Matrix<S>* dx_out) {
  const int64_t heads = config.n_heads;
  const int64_t dh = config.head_dim();
  const S scale = S(1) / std::sqrt(static_cast<S>(dh));
  const Eigen::Index len = dy.rows();

  const Matrix<S> dr2 = LayerNormBackward(dy, b.out_norm, c.out_norm, g.out_norm);
  Matrix<S> dff_out = dr2;
  if (c.ffn_mask.size() > 0) dff_out = dff_out.cwiseProduct(c.ffn_mask);
  const Matrix<S> dff_act = LinearBackward(dff_out, c.ff_act, b.lin2, g.lin2);
  const Matrix<S> dff_pre =
      dff_act.cwiseProduct(c.ff_pre.unaryExpr([](S t) { return GeluGrad(t); }));
  Matrix<S> dsa_out = dr2 + LinearBackward(dff_pre, c.sa_out, b.lin1, g.lin1);

  const Matrix<S> dr1 = LayerNormBackward(dsa_out, b.sa_norm, c.sa_norm, g.sa_norm);
  const Matrix<S> dcontext = LinearBackward(dr1, c.context, b.out, g.out);
  Matrix<S> dq(len, config.dim), dk(len, config.dim), dv(len, config.dim);
  for (int64_t h = 0; h < heads; ++h) {
    const Matrix<S>& probs = c.probs[h];
    const bool masked = !c.attn_masks.empty();
    const Matrix<S> used = masked ? Matrix<S>(probs.cwiseProduct(c.attn_masks[h])) : probs;
    const auto dctx = dcontext.middleCols(h * dh, dh);
    dv.middleCols(h * dh, dh) = used.transpose() * dctx;
    Matrix<S> dprobs = dctx * c.v.middleCols(h * dh, dh).transpose();
    if (masked) dprobs = dprobs.cwiseProduct(c.attn_masks[h]);
    const Column<S> inner = (dprobs.cwiseProduct(probs)).rowwise().sum();
    const Matrix<S> dscores = probs.cwiseProduct((dprobs.colwise() - inner)) * scale;
    dq.middleCols(h * dh, dh) = dscores * c.k.middleCols(h * dh, dh);
    dk.middleCols(h * dh, dh) = dscores.transpose() * c.q.middleCols(h * dh, dh);
  }
  Matrix<S> dx = dr1;
  dx += LinearBackward(dq, c.input, b.q, g.q);
  dx += LinearBackward(dk, c.input, b.k, g.k);
  dx += LinearBackward(dv, c.input, b.v, g.v);
  if (dx_out != nullptr) *dx_out = std::move(dx);
}

template <typename S>
void CheckShape(const RawTensor& t, const std::string& name, int64_t rows, int64_t cols,
                bool is_vector) {
  const std::vector<int64_t> want =
      is_vector ? std::vector<int64_t>{cols} : std::vector<int64_t>{rows, cols};
  if (t.shape != want) {
    std::string got, exp;
    for (auto s : t.shape) got += std::to_string(s) + ",";
    for (auto s : want) exp += std::to_string(s) + ",";
    throw IoError("tensor " + name + " has shape [" + got + "] but the config implies [" + exp +
                  "]");
  }
}

// Older checkpoints name LayerNorm parameters gamma/beta.
const RawTensor* FindTensor(const TensorFile& file, const std::string& name) {
  if (auto it = file.tensors.find(name); it != file.tensors.end()) return &it->second;
  auto alias = [&](std::string_view from, std::string_view to) -> const RawTensor* {
    if (name.size() < from.size() || name.compare(name.size() - from.size(), from.size(), from))
      return nullptr;
    const std::string other = name.substr(0, name.size() - from.size()) + std::string(to);
    auto it = file.tensors.find(other);
    return it == file.tensors.end() ? nullptr : &it->second;
  };
  if (name.find("norm") != std::string::npos || name.find("LayerNorm") != std::string::npos) {
    if (const RawTensor* t = alias(".weight", ".gamma")) return t;
    if (const RawTensor* t = alias(".bias", ".beta")) return t;
  }
  return nullptr;
}

template <typename S>
void CopyInto(const RawTensor& t, const ParamView<S>& view) {
  CheckShape<S>(t, view.name, view.rows, view.cols, view.is_vector);
  const std::vector<S> values = t.Values<S>();
  std::copy(values.begin(), values.end(), view.data);
}

}  // namespace

template <typename S>
ModelParams<S> InitModelParams(const EncoderConfig& config, uint64_t seed, bool with_mlm_head) {
  config.Validate();
  Rng rng(seed);
  ModelParams<S> p;
  p.config = config;
  FillNormal(p.word_embeddings, config.vocab_size, config.dim, rng);
  FillNormal(p.position_embeddings, config.max_position_embeddings, config.dim, rng);
  p.embedding_norm = InitNorm<S>(config.dim);
  for (int64_t i = 0; i < config.n_layers; ++i) {
    BlockParams<S> b;
    b.q = InitLinear<S>(config.dim, config.dim, rng);
    b.k = InitLinear<S>(config.dim, config.dim, rng);
    b.v = InitLinear<S>(config.dim, config.dim, rng);
    b.out = InitLinear<S>(config.dim, config.dim, rng);
    b.sa_norm = InitNorm<S>(config.dim);
    b.lin1 = InitLinear<S>(config.hidden_dim, config.dim, rng);
    b.lin2 = InitLinear<S>(config.dim, config.hidden_dim, rng);
    b.out_norm = InitNorm<S>(config.dim);
    p.blocks.push_back(std::move(b));
  }
  if (with_mlm_head) {
    MlmHeadParams<S> m;
    m.transform = InitLinear<S>(config.dim, config.dim, rng);
    m.norm = InitNorm<S>(config.dim);
    m.projector.weight = p.word_embeddings;  // tied, as in the reference model
    m.projector.bias = RowVector<S>::Zero(config.vocab_size);
    p.mlm = std::move(m);
  }
  InitClassifierHead(p, DeriveSeed(seed, {0x4ead}));
  return p;
}

template <typename S>
void InitClassifierHead(ModelParams<S>& params, uint64_t seed) {
  Rng rng(seed);
  params.classifier = InitLinear<S>(kNumLabels, params.config.dim, rng);
}

template <typename S>
TrainableGrads<S> ZeroGrads(const ModelParams<S>& params, int trainable_layers) {
  if (trainable_layers < 0 || trainable_layers > static_cast<int>(params.blocks.size())) {
    throw ConfigError("trainable_layers " + std::to_string(trainable_layers) +
                      " outside [0, " + std::to_string(params.blocks.size()) + "]");
  }
  TrainableGrads<S> g;
  const size_t first = params.blocks.size() - static_cast<size_t>(trainable_layers);
  for (size_t i = first; i < params.blocks.size(); ++i) g.blocks.push_back(ZeroBlock(params.blocks[i]));
  g.classifier = ZeroLinear(params.classifier);
  return g;
}

template <typename S>
std::vector<ParamView<S>> AllViews(ModelParams<S>& p) {
  std::vector<ParamView<S>> out;
  out.push_back({"distilbert.embeddings.word_embeddings.weight", p.word_embeddings.data(),
                 p.word_embeddings.rows(), p.word_embeddings.cols(), false});
  out.push_back({"distilbert.embeddings.position_embeddings.weight", p.position_embeddings.data(),
                 p.position_embeddings.rows(), p.position_embeddings.cols(), false});
  AddNorm(out, "distilbert.embeddings.LayerNorm", p.embedding_norm);
  for (size_t i = 0; i < p.blocks.size(); ++i) AddBlock(out, i, p.blocks[i]);
  AddLinear(out, "classifier", p.classifier);
  if (p.mlm) {
    AddLinear(out, "vocab_transform", p.mlm->transform);
    AddNorm(out, "vocab_layer_norm", p.mlm->norm);
    AddLinear(out, "vocab_projector", p.mlm->projector);
  }
  return out;
}

template <typename S>
std::vector<ParamView<S>> TrainableViews(ModelParams<S>& p, int trainable_layers) {
  std::vector<ParamView<S>> out;
  const size_t first = p.blocks.size() - static_cast<size_t>(trainable_layers);
  for (size_t i = first; i < p.blocks.size(); ++i) AddBlock(out, i, p.blocks[i]);
  AddLinear(out, "classifier", p.classifier);
  return out;
}

template <typename S>
std::vector<ParamView<S>> GradViews(TrainableGrads<S>& g, int first_layer) {
  std::vector<ParamView<S>> out;
  for (size_t i = 0; i < g.blocks.size(); ++i) {
    AddBlock(out, static_cast<size_t>(first_layer) + i, g.blocks[i]);
  }
  AddLinear(out, "classifier", g.classifier);
  return out;
}

template <typename S>
TensorFile ParamsToTensors(ModelParams<S>& params) {
  TensorFile file;
  for (const ParamView<S>& v : AllViews(params)) {
    std::vector<int64_t> shape =
        v.is_vector ? std::vector<int64_t>{v.cols} : std::vector<int64_t>{v.rows, v.cols};
    file.tensors.emplace(v.name, MakeTensor<S>(std::move(shape), v.data));
  }
  file.metadata["format"] = "pt";
  return file;
}

template <typename S>
ModelParams<S> ParamsFromTensors(const EncoderConfig& config, const TensorFile& file,
                                 uint64_t head_seed, bool* head_initialized) {
  const bool has_mlm = file.tensors.contains("vocab_transform.weight");
  ModelParams<S> p;
  p.config = config;
  p.word_embeddings.resize(config.vocab_size, config.dim);
  p.position_embeddings.resize(config.max_position_embeddings, config.dim);
  p.embedding_norm = InitNorm<S>(config.dim);
  p.blocks.resize(config.n_layers);
  for (auto& b : p.blocks) {
    for (LinearParams<S>* l : {&b.q, &b.k, &b.v, &b.out}) {
      l->weight.resize(config.dim, config.dim);
      l->bias.resize(config.dim);
    }
    b.lin1.weight.resize(config.hidden_dim, config.dim);
    b.lin1.bias.resize(config.hidden_dim);
    b.lin2.weight.resize(config.dim, config.hidden_dim);
    b.lin2.bias.resize(config.dim);
    b.sa_norm = InitNorm<S>(config.dim);
    b.out_norm = InitNorm<S>(config.dim);
  }
  p.classifier.weight.resize(kNumLabels, config.dim);
  p.classifier.bias.resize(kNumLabels);
  if (has_mlm) {
    MlmHeadParams<S> m;
    m.transform.weight.resize(config.dim, config.dim);
    m.transform.bias.resize(config.dim);
    m.norm = InitNorm<S>(config.dim);
    m.projector.weight.resize(config.vocab_size, config.dim);
    m.projector.bias.resize(config.vocab_size);
    p.mlm = std::move(m);
  }
  bool head_missing = false;
  bool projector_tied = false;
  for (const ParamView<S>& view : AllViews(p)) {
    std::string name = view.name;
    const RawTensor* t = FindTensor(file, name);
    // Base checkpoints may omit the "distilbert." prefix.
    if (t == nullptr && name.rfind("distilbert.", 0) == 0) {
      t = FindTensor(file, name.substr(11));
    }
    if (t == nullptr) {
      if (name.rfind("classifier.", 0) == 0) {
        head_missing = true;
        continue;
      }
      if (name == "vocab_projector.weight") {
        projector_tied = true;
        continue;
      }
      if (name == "vocab_projector.bias") {
        std::fill(view.data, view.data + view.size(), S(0));
        continue;
      }
      throw IoError("weights file is missing tensor " + name);
    }
    CopyInto(*t, view);
  }
  if (projector_tied) p.mlm->projector.weight = p.word_embeddings;
  if (head_missing) InitClassifierHead(p, head_seed);
  if (head_initialized != nullptr) *head_initialized = head_missing;
  return p;
}

template <typename S>
ForwardState<S> Forward(const ModelParams<S>& params, std::span<const int32_t> ids,
                        const ForwardOptions& options) {
  const EncoderConfig& config = params.config;
  const auto len = static_cast<Eigen::Index>(ids.size());
  if (len > config.max_position_embeddings) {
    throw ContractViolation("sequence of " + std::to_string(len) + " tokens exceeds max length " +
                            std::to_string(config.max_position_embeddings));
  }
  const int n_layers = static_cast<int>(params.blocks.size());
  if (options.cache_layers < 0 || options.cache_layers > n_layers) {
    throw ContractViolation("cache_layers out of range");
  }
  Matrix<S> x(len, config.dim);
  for (Eigen::Index i = 0; i < len; ++i) {
    const int32_t id = ids[i];
    if (id < 0 || id >= config.vocab_size) {
      throw ContractViolation("token id " + std::to_string(id) + " outside the vocabulary");
    }
    x.row(i) = params.word_embeddings.row(id) + params.position_embeddings.row(i);
  }
  Rng* rng = options.dropout_rng;
  x = LayerNorm<S>(x, params.embedding_norm, config.layer_norm_eps, nullptr);
  if (rng != nullptr && config.dropout > 0) {
    x = x.cwiseProduct(DropoutMask<S>(x.rows(), x.cols(), config.dropout, *rng));
  }
  ForwardState<S> state;
  state.caches.resize(options.cache_layers);
  const int first_cached = n_layers - options.cache_layers;
  for (int l = 0; l < n_layers; ++l) {
    BlockCache<S>* cache = l >= first_cached ? &state.caches[l - first_cached] : nullptr;
    x = BlockForward(params.blocks[l], config, x, rng, cache);
  }
  state.hidden = std::move(x);
  state.head_input = state.hidden;
  if (rng != nullptr && config.classifier_dropout > 0) {
    state.head_mask = DropoutMask<S>(len, config.dim, config.classifier_dropout, *rng);
    state.head_input = state.head_input.cwiseProduct(state.head_mask);
  }
  state.logits = Linear(state.head_input, params.classifier);
  return state;
}

template <typename S>
Matrix<S> SoftmaxRows(const Matrix<S>& logits) {
  Matrix<S> p = logits;
  SoftmaxInPlace(p);
  return p;
}

template <typename S>
S EligibleCrossEntropy(const Matrix<S>& logits, const EligibleTokenSet& eligible, Label gold,
                       Matrix<S>* dlogits) {
  const int c = Index(gold);
  if (dlogits != nullptr) *dlogits = Matrix<S>::Zero(logits.rows(), logits.cols());
  S total = 0;
  for (size_t i : eligible) {
    if (static_cast<Eigen::Index>(i) >= logits.rows()) {
      throw ContractViolation("eligible index " + std::to_string(i) + " out of range");
    }
    const auto row = logits.row(static_cast<Eigen::Index>(i));
    const S max = row.maxCoeff();
    const S log_z = max + std::log((row.array() - max).exp().sum());
    total += log_z - row(c);
    if (dlogits != nullptr) {
      auto d = dlogits->row(static_cast<Eigen::Index>(i));
      d = (row.array() - log_z).exp().matrix();
      d(c) -= S(1);
    }
  }
  return total;
}

template <typename S>
void Backward(const ModelParams<S>& params, const ForwardState<S>& state,
              const Matrix<S>& dlogits, TrainableGrads<S>& grads) {
  if (grads.blocks.size() != state.caches.size()) {
    throw ContractViolation("gradient buffers do not match the cached layers");
  }
  Matrix<S> dhidden = LinearBackward(dlogits, state.head_input, params.classifier,
                                     grads.classifier);
  if (state.head_mask.size() > 0) dhidden = dhidden.cwiseProduct(state.head_mask);
  const size_t n = params.blocks.size();
  const size_t k = state.caches.size();
  for (size_t j = k; j-- > 0;) {
    const size_t layer = n - k + j;
    Matrix<S> dx;
    BlockBackward(params.blocks[layer], params.config, state.caches[j], dhidden, grads.blocks[j],
                  j > 0 ? &dx : nullptr);
    dhidden = std::move(dx);
  }
}

template <typename S>
Matrix<S> MlmLogits(const ModelParams<S>& params, const Matrix<S>& hidden) {
  if (!params.mlm) throw ConfigError("backbone has no masked-LM head");
  const MlmHeadParams<S>& m = *params.mlm;
  Matrix<S> t = Linear(hidden, m.transform).unaryExpr([](S v) { return Gelu(v); });
  t = LayerNorm<S>(t, m.norm, params.config.layer_norm_eps, nullptr);
  return Linear(t, m.projector);
}

#define NP2IO_INSTANTIATE(S)                                                                    \
  template ModelParams<S> InitModelParams<S>(const EncoderConfig&, uint64_t, bool);            \
  template void InitClassifierHead<S>(ModelParams<S>&, uint64_t);                              \
  template TrainableGrads<S> ZeroGrads<S>(const ModelParams<S>&, int);                         \
  template std::vector<ParamView<S>> AllViews<S>(ModelParams<S>&);                             \
  template std::vector<ParamView<S>> TrainableViews<S>(ModelParams<S>&, int);                  \
  template std::vector<ParamView<S>> GradViews<S>(TrainableGrads<S>&, int);                    \
  template TensorFile ParamsToTensors<S>(ModelParams<S>&);                                     \
  template ModelParams<S> ParamsFromTensors<S>(const EncoderConfig&, const TensorFile&,        \
                                               uint64_t, bool*);                               \
  template ForwardState<S> Forward<S>(const ModelParams<S>&, std::span<const int32_t>,         \
                                      const ForwardOptions&);                                  \
  template Matrix<S> SoftmaxRows<S>(const Matrix<S>&);                                         \
  template S EligibleCrossEntropy<S>(const Matrix<S>&, const EligibleTokenSet&, Label,         \
                                     Matrix<S>*);                                              \
  template void Backward<S>(const ModelParams<S>&, const ForwardState<S>&, const Matrix<S>&,   \
                            TrainableGrads<S>&);                                               \
  template Matrix<S> MlmLogits<S>(const ModelParams<S>&, const Matrix<S>&);

NP2IO_INSTANTIATE(float)
NP2IO_INSTANTIATE(double)

#undef NP2IO_INSTANTIATE

}  // namespace np2io
