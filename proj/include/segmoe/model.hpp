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
#ifndef SEGMOE_MODEL_HPP_
#define SEGMOE_MODEL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "segmoe/tensor.hpp"

namespace segmoe {

// Common surface of every attack target and trainable network: a
// differentiable map from images [N,C,H,W] to per-class scores [N,K,H,W] plus
// the loss an attacker maximizes.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string kind() const = 0;
  virtual std::size_t num_classes() const = 0;
  virtual std::size_t in_channels() const = 0;
  virtual std::size_t height() const = 0;
  virtual std::size_t width() const = 0;

  // Logits for networks and mixtures, probabilities for ensembles.
  virtual Tensor Scores(const Tensor& x) const = 0;
  // Pixel-mean cross-entropy of Scores(x) against the ground truth.
  virtual Tensor Loss(const Tensor& x, const IntMask& y) const = 0;
  // Trainable parameters (handles aliasing the model's storage).
  virtual std::vector<Tensor> Parameters() const = 0;

  // Argmax prediction without recording a graph.
  IntMask Predict(const Tensor& x) const;
  // Throws kShape unless x is [N, in_channels, height, width].
  void CheckInput(const Tensor& x) const;
};

// FNV-1a over the raw bytes of every tensor, in order.
std::uint64_t HashParameters(std::span<const Tensor> params);

}  // namespace segmoe

#endif  // SEGMOE_MODEL_HPP_
