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
#ifndef SEGMOE_NETS_HPP_
#define SEGMOE_NETS_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "segmoe/data.hpp"
#include "segmoe/model.hpp"
#include "segmoe/tensor.hpp"

namespace segmoe {

struct SegNetConfig {
  std::size_t in_channels = 3;
  std::size_t num_classes = 8;
  std::vector<std::size_t> widths = {16, 32, 32};
  std::size_t height = 64;
  std::size_t width = 64;

  void Validate() const;
  nlohmann::json ToJson() const;
  static SegNetConfig FromJson(const nlohmann::json& j);
  bool operator==(const SegNetConfig&) const = default;
};

// Small encoder-decoder segmentation network:
//
//   x -> conv3x3 -> relu -> h1                        [N,w0,H,W]
//   h1 -> avgpool2 -> conv3x3 -> relu -> conv3x3 -> relu -> features
//                                                     [N,w2,H/2,W/2]
//   concat(upsample2(features), h1) -> conv1x1 -> logits [N,K,H,W]
//
// The feature tap is the last hidden layer before the logits head; a mixture
// gate consumes it.
class SegModel final : public Model {
 public:
  // Kaiming-style fan-in initialization from `seed`; zero biases.
  SegModel(SegNetConfig config, std::uint64_t seed);
  static SegModel ZeroInitialized(SegNetConfig config);

  struct Output {
    Tensor logits;
    Tensor features;
  };
  Output Forward(const Tensor& x) const;

  std::string kind() const override { return "segnet"; }
  std::size_t num_classes() const override { return config_.num_classes; }
  std::size_t in_channels() const override { return config_.in_channels; }
  std::size_t height() const override { return config_.height; }
  std::size_t width() const override { return config_.width; }
  Tensor Scores(const Tensor& x) const override { return Forward(x).logits; }
  Tensor Loss(const Tensor& x, const IntMask& y) const override;
  std::vector<Tensor> Parameters() const override { return params_; }

  const SegNetConfig& config() const { return config_; }
  static const std::vector<std::string>& ParameterNames();
  Shape FeatureShape(std::size_t batch) const;

  // Frozen models record no parameter gradients.
  void SetFrozen(bool frozen);
  bool frozen() const { return frozen_; }
  std::uint64_t ParameterHash() const { return HashParameters(params_); }

 private:
  explicit SegModel(SegNetConfig config);
  SegNetConfig config_;
  std::vector<Tensor> params_;  // c1.w c1.b c2.w c2.b c3.w c3.b head.w head.b
  bool frozen_ = false;
};

// Tensor list serialization shared by the checkpoint formats: for each tensor
// u32 rank, u32 dims..., f64 little-endian values.
void WriteTensors(std::ostream& os, std::span<const Tensor> tensors);
// Reads exactly `expected.size()` tensors whose shapes must match.
void ReadTensorsInto(std::istream& is, std::span<Tensor> expected, const std::string& where);

// "SEGCKPT1", u32-length-prefixed JSON {"config": ..., "meta": ...}, tensors.
void SaveSegModel(const SegModel& model, const std::filesystem::path& path,
                  const nlohmann::json& meta = nlohmann::json::object());
SegModel LoadSegModel(const std::filesystem::path& path, nlohmann::json* meta = nullptr);

struct TrainConfig {
  std::size_t epochs = 60;
  std::size_t batch_size = 8;
  double base_lr = 0.01;
  double power = 0.9;
  double momentum = 0.9;
  std::uint64_t seed = 0;

  void Validate() const;
  nlohmann::json ToJson() const;
  // Keys absent from `j` keep the value from `defaults`.
  static TrainConfig FromJson(const nlohmann::json& j, TrainConfig defaults);
  static TrainConfig FromJson(const nlohmann::json& j);
};

struct TrainReport {
  std::vector<double> epoch_loss;  // mean batch loss per epoch
  std::vector<double> val_miou;    // per epoch; empty without a val split
  std::int64_t iterations = 0;
  nlohmann::json ToJson() const;
};

// Called after every SGD step with (iteration, batch loss).
using StepObserver = std::function<void(std::int64_t, double)>;

// Mini-batch SGD (heavy-ball momentum) with polynomial learning-rate decay
// over model.Parameters().
// Batches are reshuffled each epoch from cfg.seed.
TrainReport Train(Model& model, std::span<const Sample* const> train, const TrainConfig& cfg,
                  std::span<const Sample* const> val = {}, const StepObserver& observer = {});

}  // namespace segmoe

#endif  // SEGMOE_NETS_HPP_
