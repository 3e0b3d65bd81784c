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

#ifndef NP2IO_CLASSIFIER_LOSS_H_
#define NP2IO_CLASSIFIER_LOSS_H_

#include <span>

#include "np2io/classifier/token_classifier.h"
#include "np2io/corpus/label.h"
#include "np2io/spans/eligible.h"

namespace np2io {

// Sum over eligible tokens of -log(probability of `gold`). An empty eligible
// set gives 0 and increments *skipped when provided.
double EligibleTokenLoss(std::span<const PredictionVector> predictions,
                         const EligibleTokenSet& eligible, Label gold, size_t* skipped = nullptr);

}  // namespace np2io

#endif  // NP2IO_CLASSIFIER_LOSS_H_
