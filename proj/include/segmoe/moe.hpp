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
#ifndef SEGMOE_MOE_HPP_
#define SEGMOE_MOE_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "segmoe/nets.hpp"

namespace segmoe {

enum class GateKind { kSimple, kClasswise };

std::string GateKindName(GateKind kind);
GateKind ParseGateKind(const std::string& name);

using ExpertList = std::vector<std::shared_ptr<const SegModel>>;

// Gate over concatenated expert features:
//
//   concat(f_1..f_E) -> conv3x3 (E*F -> 16) -> relu -> global avg pool
//   -> fc 16->32 -> relu -> fc 32->E (simple) or 32->E*K (classwise)
//   -> softmax over the expert axis
//
// Combined logits are sum_e w_e * z_e, optionally followed by a K->K 3x3 conv.
class MoEModel final : public Model {
 public:
  // Gate weights drawn from `seed` (Kaiming fan-in, zero biases, zero output
  // layer so training starts from the uniform mix). The extra conv starts at
  // identity plus N(0, 1e-3) noise on every tap.
  MoEModel(ExpertList experts, GateKind gate, bool extra_conv, std::uint64_t seed);
  // All gate and conv parameters zero: uniform weights, and an all-zero extra
  // conv when present.
  static MoEModel ZeroInitialized(ExpertList experts, GateKind gate, bool extra_conv);

  std::string kind() const override;
  std::size_t num_classes() const override { return k_; }
  std::size_t in_channels() const override { return experts_[0]->in_channels(); }
  std::size_t height() const override { return experts_[0]->height(); }
  std::size_t width() const override { return experts_[0]->width(); }
  Tensor Scores(const Tensor& x) const override { return Forward(x).logits; }
  Tensor Loss(const Tensor& x, const IntMask& y) const override;
  // Gate parameters followed by the extra conv kernel and bias when present.
  std::vector<Tensor> Parameters() const override;

  struct Output {
    Tensor logits;
    Tensor weights;  // [N,E] or [N,E,K]
  };
  Output Forward(const Tensor& x) const;
  // Throws kShape unless there are E feature maps of one shape [N,F,h,w]
  // with F matching the configured expert width.
  Tensor GateWeights(const std::vector<Tensor>& features) const;

  GateKind gate_kind() const { return gate_; }
  bool has_extra_conv() const { return !conv_.empty(); }
  const ExpertList& experts() const { return experts_; }
  std::size_t num_experts() const { return experts_.size(); }
  std::vector<Tensor>& gate_parameters() { return gate_params_; }
  std::vector<Tensor>& conv_parameters() { return conv_; }
  // Hash over every expert's parameters in order.
  std::uint64_t ExpertHash() const;

  void SetFrozen(bool frozen);

 private:
  MoEModel(ExpertList experts, GateKind gate, bool extra_conv);

  ExpertList experts_;
  GateKind gate_;
  std::size_t k_ = 0;
  std::size_t feature_channels_ = 0;
  // conv.w conv.b fc1.w fc1.b fc2.w fc2.b
  std::vector<Tensor> gate_params_;
  // extra.w extra.b, empty without the extra conv
  std::vector<Tensor> conv_;
};

inline constexpr std::size_t kGateConvChannels = 16;
inline constexpr std::size_t kGateHidden = 32;

// Trains gate (and extra conv) parameters with the SGD schedule of `Train`.
// Throws kState unless every expert is frozen; verifies the expert hash is
// unchanged afterwards.
TrainReport TrainMoE(MoEModel& moe, std::span<const Sample* const> train, const TrainConfig& cfg,
                     std::span<const Sample* const> val = {}, const StepObserver& observer = {});

// "MOECKPT1", u32-length-prefixed JSON header {gate, extra_conv, experts:
// [{file, fnv1a64}], meta}, then gate and conv tensors. `expert_files` are
// paths as the caller sees them; the header stores them relative to the
// checkpoint's directory.
void SaveMoE(const MoEModel& moe, const std::filesystem::path& path,
             const std::vector<std::filesystem::path>& expert_files,
             const nlohmann::json& meta = nlohmann::json::object());
// Loads referenced experts (frozen) after checking their content hashes.
MoEModel LoadMoE(const std::filesystem::path& path, nlohmann::json* meta = nullptr);

}  // namespace segmoe

#endif  // SEGMOE_MOE_HPP_
