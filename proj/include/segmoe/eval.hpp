/* Copyright 2026 The segmoe Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef SEGMOE_EVAL_HPP_
#define SEGMOE_EVAL_HPP_

#include <span>

#include "segmoe/data.hpp"
#include "segmoe/metrics.hpp"
#include "segmoe/model.hpp"

namespace segmoe {

ConfusionMatrix EvaluateClean(const Model& model, std::span<const Sample* const> samples,
                              std::size_t batch_size = 8);

// Adds `delta` ([1,C,H,W], image-independent) to every image, clamps to
// [0,1], and scores the predictions.
ConfusionMatrix EvaluateWithNoise(const Model& model, std::span<const Sample* const> samples,
                                  const Tensor& delta, std::size_t batch_size = 8);

// clamp(x + delta, 0, 1) with delta broadcast over the batch.
Tensor ApplyNoise(const Tensor& images, std::span<const double> delta);

}  // namespace segmoe

#endif  // SEGMOE_EVAL_HPP_
