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

#include "np2io/classifier/optimizer.h"

#include <cmath>

#include "np2io/common/errors.h"

namespace np2io {

template <typename S>
Adam<S>::Adam(double learning_rate, double beta1, double beta2, double epsilon)
    : lr_(learning_rate), beta1_(beta1), beta2_(beta2), eps_(epsilon) {}

template <typename S>
void Adam<S>::Step(const std::vector<ParamView<S>>& params,
                   const std::vector<ParamView<S>>& grads) {
  if (params.size() != grads.size()) throw ContractViolation("adam: parameter/gradient mismatch");
  if (m_.empty()) {
    for (const auto& p : params) {
      m_.emplace_back(p.size(), S(0));
      v_.emplace_back(p.size(), S(0));
    }
  }
  if (m_.size() != params.size()) throw ContractViolation("adam: parameter set changed");
  ++step_;
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(step_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(step_));
  for (size_t t = 0; t < params.size(); ++t) {
    const ParamView<S>& p = params[t];
    const ParamView<S>& g = grads[t];
    if (p.size() != g.size()) throw ContractViolation("adam: shape mismatch for " + p.name);
    std::vector<S>& m = m_[t];
    std::vector<S>& v = v_[t];
    for (int64_t i = 0; i < p.size(); ++i) {
      const double grad = g.data[i];
      m[i] = static_cast<S>(beta1_ * m[i] + (1.0 - beta1_) * grad);
      v[i] = static_cast<S>(beta2_ * v[i] + (1.0 - beta2_) * grad * grad);
      const double mhat = m[i] / c1;
      const double vhat = v[i] / c2;
      p.data[i] -= static_cast<S>(lr_ * mhat / (std::sqrt(vhat) + eps_));
    }
  }
}

template class Adam<float>;
template class Adam<double>;

}  // namespace np2io
