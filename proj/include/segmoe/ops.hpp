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
#ifndef SEGMOE_OPS_HPP_
#define SEGMOE_OPS_HPP_

#include <vector>

#include "segmoe/tensor.hpp"

// Differentiable operators. All throw Error(kShape) on incompatible shapes.
namespace segmoe::ops {

Tensor Add(const Tensor& a, const Tensor& b);
Tensor Mul(const Tensor& a, const Tensor& b);
Tensor Scale(const Tensor& a, double factor);
Tensor Sum(const Tensor& a);

// Cross-correlation. input [N,C,H,W], kernel [F,C,kh,kw], bias [F].
// Output spatial size must divide exactly: (H + 2p - kh) % stride == 0.
Tensor Conv2d(const Tensor& input, const Tensor& kernel, const Tensor& bias,
              int stride, int padding);

Tensor Relu(const Tensor& x);

// Softmax over axis 1 of a rank >= 2 tensor (classes or experts), computed
// with max subtraction.
Tensor SoftmaxChannel(const Tensor& x);

// [N,C,H,W] -> [N,C]
Tensor GlobalAvgPool(const Tensor& x);

// [N,C,H,W] -> [N,C,H/2,W/2]; H and W must be even.
Tensor AvgPool2x2(const Tensor& x);

// x [N,in], weight [out,in], bias [out] -> [N,out]
Tensor Linear(const Tensor& x, const Tensor& weight, const Tensor& bias);

// [N,C,H,W] -> [N,C,2H,2W]
Tensor UpsampleNearest2x(const Tensor& x);

// Concatenation along axis 1; all other dims must agree.
Tensor ConcatChannels(const std::vector<Tensor>& parts);

Tensor Reshape(const Tensor& x, Shape shape);

// Pixel-mean of -log softmax(logits)[target]. logits [N,K,H,W].
Tensor CrossEntropyMean(const Tensor& logits, const IntMask& target);

// Pixel-mean of -log(p[target] / sum_k p[k]) for non-negative scores
// [N,K,H,W]. Equals the negative log-likelihood when scores already sum to 1.
Tensor CrossEntropyFromProbs(const Tensor& probs, const IntMask& target);

// out[n,k,h,w] = sum_e w[n,e(,k)] * z_e[n,k,h,w].
// weights is [N,E] (one weight per expert) or [N,E,K] (per class).
Tensor MixExperts(const Tensor& weights, const std::vector<Tensor>& expert_logits);

// Elementwise mean / maximum over same-shaped tensors. The max subgradient
// goes to the first maximal element.
Tensor StackMean(const std::vector<Tensor>& parts);
Tensor StackMax(const std::vector<Tensor>& parts);

// Argmax over axis 1 of [N,K,H,W]; ties resolve to the lowest class.
IntMask ArgmaxChannel(const Tensor& scores);

}  // namespace segmoe::ops

#endif  // SEGMOE_OPS_HPP_
