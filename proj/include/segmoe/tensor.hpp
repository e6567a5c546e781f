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
#ifndef SEGMOE_TENSOR_HPP_
#define SEGMOE_TENSOR_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace segmoe {

using Shape = std::vector<std::size_t>;

std::size_t NumElements(const Shape& shape);
std::string ShapeString(const Shape& shape);

namespace detail {

// One vertex of the reverse-mode graph. Non-leaf nodes own a closure that
// reads `grad` and accumulates into their parents' `grad`.
struct Node {
  Shape shape;
  std::vector<double> value;
  std::vector<double> grad;  // empty until the first backward reaches it
  bool requires_grad = false;
  bool is_leaf = true;
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward_fn;
};

}  // namespace detail

// Dense row-major f64 array with reverse-mode differentiation.
//
// Tensor has shared-handle semantics: copies alias the same storage and graph
// vertex. Use Clone() or Detach() for an independent copy.
class Tensor {
 public:
  Tensor() = default;

  static Tensor Zeros(Shape shape, bool requires_grad = false);
  static Tensor Full(Shape shape, double value, bool requires_grad = false);
  static Tensor FromData(Shape shape, std::vector<double> data,
                         bool requires_grad = false);
  static Tensor Scalar(double value, bool requires_grad = false);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const;
  std::size_t dim(std::size_t axis) const;
  std::size_t rank() const { return shape().size(); }
  std::size_t numel() const;

  std::span<const double> data() const;
  // Writable view; only meaningful on leaves (parameters, inputs).
  std::span<double> mutable_data();
  double item() const;
  double at(std::size_t flat_index) const { return data()[flat_index]; }

  bool requires_grad() const;
  void set_requires_grad(bool flag);
  bool has_grad() const;
  std::span<const double> grad() const;
  void zero_grad();

  // Independent leaf holding a copy of the values, outside any graph.
  Tensor Detach() const;
  Tensor Clone(bool requires_grad = false) const {
    Tensor t = Detach();
    t.set_requires_grad(requires_grad);
    return t;
  }

  // Populates grad buffers of every requires_grad leaf reachable from this
  // scalar. Leaf gradients accumulate across calls until zero_grad().
  void Backward() const;

  detail::Node* node() const { return node_.get(); }
  const std::shared_ptr<detail::Node>& node_ptr() const { return node_; }

  static Tensor MakeResult(Shape shape, std::vector<double> value,
                           std::vector<Tensor> parents,
                           std::function<void(detail::Node&)> backward_fn);

 private:
  explicit Tensor(std::shared_ptr<detail::Node> node) : node_(std::move(node)) {}
  std::shared_ptr<detail::Node> node_;
};

// Disables graph recording on the current thread for its lifetime.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

bool GradEnabled();

// Per-pixel class indices, shape (N, H, W). A single mask has N = 1.
struct IntMask {
  std::size_t batch = 1;
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<std::uint16_t> data;

  IntMask() = default;
  IntMask(std::size_t n, std::size_t h, std::size_t w)
      : batch(n), height(h), width(w), data(n * h * w, 0) {}

  std::size_t size() const { return data.size(); }
  std::uint16_t operator()(std::size_t n, std::size_t y, std::size_t x) const {
    return data[(n * height + y) * width + x];
  }
  // Throws kInvalidArgument unless every entry is < num_classes.
  void CheckClasses(std::size_t num_classes) const;
  bool operator==(const IntMask&) const = default;
};

}  // namespace segmoe

#endif  // SEGMOE_TENSOR_HPP_
