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
#ifndef SEGMOE_ATTACKS_HPP_
#define SEGMOE_ATTACKS_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "segmoe/data.hpp"
#include "segmoe/metrics.hpp"
#include "segmoe/model.hpp"

namespace segmoe {

enum class AttackFamily { kFgsm, kBim, kPgd, kUniversalPgd };

std::string AttackFamilyName(AttackFamily family);
AttackFamily ParseAttackFamily(const std::string& name);

struct AttackSpec {
  AttackFamily family = AttackFamily::kFgsm;
  double epsilon = 0.05;
  double step = 0.01;  // BIM step size or Adam learning rate
  std::size_t iterations = 10;
  std::uint64_t seed = 0;
  std::size_t passes = 5;      // universal only
  std::size_t batch_size = 8;  // universal only

  void Validate() const;
  nlohmann::json ToJson() const;
  // Keys absent from `j` keep their defaults; "family" is required.
  static AttackSpec FromJson(const nlohmann::json& j);
  // Short id used in result files, e.g. "fgsm" or "pgd10".
  std::string Id() const;
};

struct AdvResult {
  Tensor x_adv;
  Tensor delta;
  // Loss at every gradient evaluation, then at the returned x_adv.
  std::vector<double> loss_trace;
};

// Called with (iteration, current adversarial input) after every update.
using IterateObserver = std::function<void(std::size_t, const Tensor&)>;

struct LossAndGrad {
  double loss = 0.0;
  std::vector<double> grad;  // d loss / d x, same layout as x
};
// One forward/backward pass of model.Loss at x. Throws kNumeric when the loss
// or any gradient entry is not finite.
LossAndGrad InputGradient(const Model& model, const Tensor& x, const IntMask& y);

// x_adv = clamp(x + eps * sign(grad), 0, 1) with sign(0) = 0.
AdvResult Fgsm(const Model& model, const Tensor& x, const IntMask& y, double epsilon,
               const IterateObserver& observer = {});

// T steps of x <- clamp(x + alpha * sign(grad), max(x0 - eps, 0), min(x0 + eps, 1)).
AdvResult Bim(const Model& model, const Tensor& x, const IntMask& y, double epsilon, double alpha,
              std::size_t iterations, const IterateObserver& observer = {});

// delta_0 ~ U(-eps, eps); T Adam ascent steps on delta, each followed by
// delta <- clamp(delta, -eps, eps) and x_adv <- clamp(x + delta, 0, 1).
AdvResult Pgd(const Model& model, const Tensor& x, const IntMask& y, double epsilon, double lr,
              std::size_t iterations, std::uint64_t seed, const IterateObserver& observer = {});

// Dispatches FGSM, BIM or PGD. Throws kInvalidArgument for the universal family.
AdvResult RunAttack(const Model& model, const Tensor& x, const IntMask& y, const AttackSpec& spec);

struct UniversalResult {
  Tensor delta;  // [1,C,H,W]
  std::vector<double> loss_trace;        // batch loss per step
  std::vector<std::string> accessed_ids;  // every sample id read, in order
};

// Single image-independent delta trained by Adam ascent over shuffled
// batches for spec.passes epochs, projected onto the eps-ball after each step.
UniversalResult UniversalPgd(const Model& model, std::span<const Sample* const> data,
                             const AttackSpec& spec, const IterateObserver& observer = {});

// Per-instance attack on every sample (each its own graph, seed derived from
// spec.seed and the sample id). workers > 1 splits samples across threads and
// requires the model to have no trainable parameters.
ConfusionMatrix EvaluateAttack(const Model& model, std::span<const Sample* const> samples,
                               const AttackSpec& spec, std::size_t workers = 1);

struct NamedModel {
  std::string id;
  const Model* model = nullptr;
};

struct TransferEntry {
  std::string source;
  EvalRecord record;  // record.model is the target
};

// Entry (i, j): target j on the samples perturbed by the universal noise of
// source i. The zero tensor as noise gives the clean column.
std::vector<TransferEntry> TransferMatrixUniversal(std::span<const NamedModel> sources,
                                                   std::span<const Tensor> noises,
                                                   std::span<const NamedModel> targets,
                                                   std::span<const Sample* const> samples,
                                                   double epsilon);

// Entry (i, j): target j on per-instance adversarial inputs crafted against
// source i.
std::vector<TransferEntry> TransferMatrixInstance(std::span<const NamedModel> sources,
                                                  std::span<const NamedModel> targets,
                                                  std::span<const Sample* const> samples,
                                                  const AttackSpec& spec);

void WriteTransferCsv(const std::filesystem::path& path, std::span<const TransferEntry> entries,
                      const RunStamp& stamp);

// "UNIVNZ01", u32 H, W, C, f64 delta in [C,H,W] order, then u32-length-prefixed
// JSON {"epsilon": ..., "meta": ...}.
void SaveNoise(const std::filesystem::path& path, const Tensor& delta, double epsilon,
               const nlohmann::json& meta = nlohmann::json::object());
Tensor LoadNoise(const std::filesystem::path& path, double* epsilon = nullptr,
                 nlohmann::json* meta = nullptr);

}  // namespace segmoe

#endif  // SEGMOE_ATTACKS_HPP_
