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

#include "np2io/classifier/loss.h"

#include <cmath>

#include "np2io/common/errors.h"

namespace np2io {

double EligibleTokenLoss(std::span<const PredictionVector> predictions,
                         const EligibleTokenSet& eligible, Label gold, size_t* skipped) {
  if (eligible.empty()) {
    if (skipped != nullptr) ++*skipped;
    return 0.0;
  }
  double total = 0.0;
  for (size_t i : eligible) {
    if (i >= predictions.size()) {
      throw ContractViolation("eligible index " + std::to_string(i) + " out of range");
    }
    total -= std::log(predictions[i][Index(gold)]);
  }
  return total;
}

}  // namespace np2io
