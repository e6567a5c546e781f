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
#ifndef SEGMOE_ENSEMBLE_HPP_
#define SEGMOE_ENSEMBLE_HPP_

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "segmoe/moe.hpp"

namespace segmoe {

enum class EnsembleRule { kMean, kMax };

std::string EnsembleRuleName(EnsembleRule rule);
EnsembleRule ParseEnsembleRule(const std::string& name);

// Fixed-rule combination of expert softmax outputs. Scores are per-class
// probabilities: the mean is a distribution per pixel, the elementwise max is
// not. The loss renormalizes scores before taking the log-likelihood, so it is
// the usual cross-entropy for the mean rule.
class EnsembleModel final : public Model {
 public:
  EnsembleModel(ExpertList experts, EnsembleRule rule);

  std::string kind() const override { return "ensemble_" + EnsembleRuleName(rule_); }
  std::size_t num_classes() const override { return experts_[0]->num_classes(); }
  std::size_t in_channels() const override { return experts_[0]->in_channels(); }
  std::size_t height() const override { return experts_[0]->height(); }
  std::size_t width() const override { return experts_[0]->width(); }
  Tensor Scores(const Tensor& x) const override;
  Tensor Loss(const Tensor& x, const IntMask& y) const override;
  std::vector<Tensor> Parameters() const override { return {}; }

  EnsembleRule rule() const { return rule_; }
  const ExpertList& experts() const { return experts_; }

 private:
  ExpertList experts_;
  EnsembleRule rule_;
};

// JSON descriptor {"format": "segmoe-ensemble-1", "rule", "experts": [{file,
// fnv1a64}], "meta"}. `expert_files` are paths as the caller sees them; the
// descriptor stores them relative to its own directory and the loader checks
// their content hashes.
void SaveEnsemble(const EnsembleModel& ensemble, const std::filesystem::path& path,
                  const std::vector<std::filesystem::path>& expert_files,
                  const nlohmann::json& meta = nlohmann::json::object());
EnsembleModel LoadEnsemble(const std::filesystem::path& path, nlohmann::json* meta = nullptr);

// Loads a SEGCKPT1, MOECKPT1 or ensemble descriptor file, frozen.
std::shared_ptr<Model> LoadAnyModel(const std::filesystem::path& path,
                                    nlohmann::json* meta = nullptr);

}  // namespace segmoe

#endif  // SEGMOE_ENSEMBLE_HPP_
