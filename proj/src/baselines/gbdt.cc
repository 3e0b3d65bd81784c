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

#include "np2io/baselines/gbdt.h"

#include <algorithm>
#include <cmath>

#include "np2io/common/errors.h"
#include "np2io/common/log.h"

namespace np2io {
namespace {

struct GradPair {
  double g = 0;
  double h = 0;
  GradPair& operator+=(const GradPair& o) {
    g += o.g;
    h += o.h;
    return *this;
  }
};

// Cut points per feature; bin(x) = number of cuts <= x.
std::vector<std::vector<float>> QuantileCuts(const std::vector<std::vector<float>>& x,
                                             size_t num_features, int max_bins) {
  std::vector<std::vector<float>> cuts(num_features);
  std::vector<float> column(x.size());
  for (size_t f = 0; f < num_features; ++f) {
    for (size_t i = 0; i < x.size(); ++i) column[i] = x[i][f];
    std::sort(column.begin(), column.end());
    std::vector<float> unique = column;
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    std::vector<float>& c = cuts[f];
    if (unique.size() <= static_cast<size_t>(max_bins)) {
      for (size_t i = 1; i < unique.size(); ++i) c.push_back(unique[i]);
    } else {
      for (int b = 1; b < max_bins; ++b) {
        const float v = column[column.size() * static_cast<size_t>(b) / max_bins];
        if (v > column.front() && (c.empty() || v > c.back())) c.push_back(v);
      }
    }
  }
  return cuts;
}

double Score(const GradPair& p, double lambda) { return p.g * p.g / (p.h + lambda); }

class TreeBuilder {
 public:
  TreeBuilder(const std::vector<std::vector<uint8_t>>& bins,
              const std::vector<std::vector<float>>& cuts, const GbdtOptions& options)
      : bins_(bins), cuts_(cuts), options_(options) {}

  GbdtTree Build(const std::vector<GradPair>& grads) {
    GbdtTree tree;
    const size_t n = grads.size();
    std::vector<uint32_t> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = static_cast<uint32_t>(i);
    struct Open {
      int32_t node;
      std::vector<uint32_t> rows;
      std::vector<GradPair> hist;
      GradPair sum;
    };
    std::vector<Open> level;
    {
      Open root{0, std::move(all), {}, {}};
      root.hist = Histogram(root.rows, grads);
      for (const GradPair& g : grads) root.sum += g;
      tree.nodes.emplace_back();
      level.push_back(std::move(root));
    }
    for (int depth = 0; !level.empty(); ++depth) {
      std::vector<Open> next;
      for (Open& open : level) {
        Split split;
        if (depth < options_.max_depth) split = BestSplit(open.hist, open.sum);
        if (split.feature < 0) {
          tree.nodes[open.node].value =
              -open.sum.g / (open.sum.h + options_.lambda) * options_.eta;
          continue;
        }
        const std::vector<uint8_t>& col = bins_[split.feature];
        Open left{static_cast<int32_t>(tree.nodes.size()), {}, {}, split.left};
        Open right{static_cast<int32_t>(tree.nodes.size() + 1), {}, {}, {}};
        right.sum = {open.sum.g - split.left.g, open.sum.h - split.left.h};
        for (uint32_t r : open.rows) (col[r] <= split.bin ? left.rows : right.rows).push_back(r);
        // Build the smaller child's histogram directly, derive the other.
        Open& small = left.rows.size() <= right.rows.size() ? left : right;
        Open& large = &small == &left ? right : left;
        small.hist = Histogram(small.rows, grads);
        large.hist = open.hist;
        for (size_t k = 0; k < large.hist.size(); ++k) {
          large.hist[k].g -= small.hist[k].g;
          large.hist[k].h -= small.hist[k].h;
        }
        GbdtNode& node = tree.nodes[open.node];
        node.feature = split.feature;
        node.threshold = cuts_[split.feature][split.bin];
        node.left = left.node;
        node.right = right.node;
        tree.nodes.emplace_back();
        tree.nodes.emplace_back();
        open.rows.clear();
        open.hist.clear();
        next.push_back(std::move(left));
        next.push_back(std::move(right));
      }
      level = std::move(next);
    }
    return tree;
  }

 private:
  struct Split {
    int32_t feature = -1;
    uint8_t bin = 0;  // rows with bin <= this go left
    GradPair left;
  };

  size_t Offset(size_t f) const { return f * kStride; }

  std::vector<GradPair> Histogram(const std::vector<uint32_t>& rows,
                                  const std::vector<GradPair>& grads) const {
    std::vector<GradPair> hist(bins_.size() * kStride);
    for (size_t f = 0; f < bins_.size(); ++f) {
      GradPair* h = hist.data() + Offset(f);
      const uint8_t* col = bins_[f].data();
      for (uint32_t r : rows) h[col[r]] += grads[r];
    }
    return hist;
  }

  Split BestSplit(const std::vector<GradPair>& hist, const GradPair& sum) const {
    Split best;
    double best_gain = 0;
    const double parent = Score(sum, options_.lambda);
    for (size_t f = 0; f < bins_.size(); ++f) {
      const size_t nbins = cuts_[f].size() + 1;
      const GradPair* h = hist.data() + Offset(f);
      GradPair left;
      for (size_t b = 0; b + 1 < nbins; ++b) {
        left += h[b];
        const GradPair right{sum.g - left.g, sum.h - left.h};
        if (left.h < options_.min_child_weight || right.h < options_.min_child_weight) continue;
        const double gain = 0.5 * (Score(left, options_.lambda) +
                                   Score(right, options_.lambda) - parent) -
                            options_.gamma;
        if (gain > best_gain + 1e-12) {
          best_gain = gain;
          best.feature = static_cast<int32_t>(f);
          best.bin = static_cast<uint8_t>(b);
          best.left = left;
        }
      }
    }
    return best;
  }

  static constexpr size_t kStride = 256;
  const std::vector<std::vector<uint8_t>>& bins_;
  const std::vector<std::vector<float>>& cuts_;
  const GbdtOptions& options_;
};

}  // namespace

double GbdtTree::Evaluate(const float* x) const {
  int32_t i = 0;
  while (nodes[i].feature >= 0) i = x[nodes[i].feature] < nodes[i].threshold ? nodes[i].left
                                                                             : nodes[i].right;
  return nodes[i].value;
}

std::vector<double> GbdtModel::Margins(const std::vector<float>& x) const {
  if (x.size() != num_features_) {
    throw ContractViolation("feature vector has " + std::to_string(x.size()) +
                            " components, model expects " + std::to_string(num_features_));
  }
  std::vector<double> m(num_classes_, base_score_);
  if (constant_) {
    m[*constant_] += 1;
    return m;
  }
  for (const auto& round : trees_) {
    for (int c = 0; c < num_classes_; ++c) m[c] += round[c].Evaluate(x.data());
  }
  return m;
}

int GbdtModel::Predict(const std::vector<float>& x) const {
  const std::vector<double> m = Margins(x);
  return static_cast<int>(std::max_element(m.begin(), m.end()) - m.begin());
}

GbdtModel TrainGbdt(const std::vector<std::vector<float>>& features,
                    const std::vector<int>& labels, int num_classes, const GbdtOptions& options,
                    std::vector<std::string>* warnings) {
  if (features.empty()) throw ConfigError("boosted trees need at least one training row");
  if (features.size() != labels.size()) {
    throw ConfigError("boosted trees: " + std::to_string(features.size()) + " rows but " +
                      std::to_string(labels.size()) + " labels");
  }
  if (num_classes < 2) throw ConfigError("boosted trees need at least two classes");
  if (options.max_bins < 2 || options.max_bins > 256) {
    throw ConfigError("max_bins must be in [2, 256]");
  }
  const size_t num_features = features[0].size();
  for (const auto& row : features) {
    if (row.size() != num_features) throw ConfigError("boosted trees: ragged feature rows");
  }
  for (int y : labels) {
    if (y < 0 || y >= num_classes) throw ConfigError("label out of range: " + std::to_string(y));
  }

  GbdtModel model;
  model.num_classes_ = num_classes;
  model.num_features_ = num_features;
  model.base_score_ = options.base_score;
  if (std::all_of(labels.begin(), labels.end(), [&](int y) { return y == labels[0]; })) {
    const std::string w = "training set has a single class (" + std::to_string(labels[0]) +
                          "); using a constant predictor";
    LogWarning(w);
    if (warnings != nullptr) warnings->push_back(w);
    model.constant_ = labels[0];
    return model;
  }

  const size_t n = features.size();
  const std::vector<std::vector<float>> cuts = QuantileCuts(features, num_features, options.max_bins);
  std::vector<std::vector<uint8_t>> bins(num_features, std::vector<uint8_t>(n));
  for (size_t f = 0; f < num_features; ++f) {
    for (size_t i = 0; i < n; ++i) {
      bins[f][i] = static_cast<uint8_t>(
          std::upper_bound(cuts[f].begin(), cuts[f].end(), features[i][f]) - cuts[f].begin());
    }
  }

  TreeBuilder builder(bins, cuts, options);
  std::vector<double> margins(n * num_classes, options.base_score);
  std::vector<double> probs(num_classes);
  std::vector<std::vector<GradPair>> grads(num_classes, std::vector<GradPair>(n));
  for (int round = 0; round < options.rounds; ++round) {
    for (size_t i = 0; i < n; ++i) {
      const double* m = &margins[i * num_classes];
      const double mx = *std::max_element(m, m + num_classes);
      double z = 0;
      for (int c = 0; c < num_classes; ++c) z += probs[c] = std::exp(m[c] - mx);
      for (int c = 0; c < num_classes; ++c) {
        const double p = probs[c] / z;
        grads[c][i] = {p - (labels[i] == c ? 1.0 : 0.0), std::max(2.0 * p * (1.0 - p), 1e-16)};
      }
    }
    std::vector<GbdtTree> trees;
    trees.reserve(num_classes);
    for (int c = 0; c < num_classes; ++c) {
      trees.push_back(builder.Build(grads[c]));
      for (size_t i = 0; i < n; ++i) {
        margins[i * num_classes + c] += trees.back().Evaluate(features[i].data());
      }
    }
    model.trees_.push_back(std::move(trees));
  }
  return model;
}

}  // namespace np2io
