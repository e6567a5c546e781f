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
#ifndef SEGMOE_OPTIM_HPP_
#define SEGMOE_OPTIM_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "segmoe/tensor.hpp"

namespace segmoe {

// base_lr * (1 - iter / max_iter)^power, for 0 <= iter < max_iter.
double PolyLearningRate(double base_lr, std::int64_t iter, std::int64_t max_iter,
                        double power);

// Plain SGD on every parameter's accumulated gradient with poly decay.
// Parameters without a gradient are left untouched.
void SgdPolyStep(std::span<Tensor> params, double base_lr, std::int64_t iter,
                 std::int64_t max_iter, double power);

// Heavy-ball variant: v <- momentum * v + grad, param -= lr * v. `velocity`
// holds one buffer per parameter and is sized on first use. momentum = 0
// reproduces SgdPolyStep exactly.
void SgdMomentumPolyStep(std::span<Tensor> params, std::vector<std::vector<double>>& velocity,
                         double momentum, double base_lr, std::int64_t iter,
                         std::int64_t max_iter, double power);

void ZeroGrads(std::span<Tensor> params);

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::int64_t step = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double learning_rate = 0.01;

  AdamState() = default;
  AdamState(std::size_t size, double lr) : m(size, 0.0), v(size, 0.0), learning_rate(lr) {}
  void Reset() {
    std::fill(m.begin(), m.end(), 0.0);
    std::fill(v.begin(), v.end(), 0.0);
    step = 0;
  }
};

// Bias-corrected Adam. With `ascent` the step is added (loss maximization).
void AdamStep(AdamState& state, std::span<double> target,
              std::span<const double> grad, bool ascent);

}  // namespace segmoe

#endif  // SEGMOE_OPTIM_HPP_
