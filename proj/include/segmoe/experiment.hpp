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
#ifndef SEGMOE_EXPERIMENT_HPP_
#define SEGMOE_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "segmoe/attacks.hpp"
#include "segmoe/data.hpp"
#include "segmoe/nets.hpp"

namespace segmoe {

// The nine rows of the robustness table, in display order.
const std::vector<std::string>& KnownModelIds();
// "single" for the baseline and experts, "combination" otherwise.
std::string ModelGroup(const std::string& id);

struct ExperimentConfig {
  std::uint64_t seed = 0;
  SceneConfig data;  // data.seed is derived from `seed`
  std::vector<std::size_t> net_widths = SegNetConfig{}.widths;
  TrainConfig expert_train;
  TrainConfig moe_train;
  std::vector<std::string> roster;
  std::vector<double> epsilons = {0.01, 0.02, 0.05, 0.1};
  double table_epsilon = 0.05;
  AttackSpec pgd;
  AttackSpec universal;
  std::size_t workers = 1;
  std::filesystem::path out_dir = "runs/default";

  // Required top-level keys: seed, data, train, roster, attacks. Missing keys
  // are reported by name (kConfig). Optional: net.widths, out_dir.
  static ExperimentConfig FromJson(const nlohmann::json& j);
  static ExperimentConfig FromFile(const std::filesystem::path& path);
  nlohmann::json ToJson() const;
  // Re-derives every seed stream after a seed override.
  void SetSeed(std::uint64_t value);
  // FNV-1a of the canonical JSON of {seed, data, net, train, roster}; attack
  // settings are excluded so sweeps at other budgets stay comparable.
  std::string Hash() const;
  RunStamp Stamp() const { return {Hash(), seed}; }
};

enum class Stage { kGenData, kTrain, kAttack, kUniversal, kTransfer, kReport };
std::string StageName(Stage stage);
Stage ParseStage(const std::string& name);

struct StageOptions {
  std::optional<std::string> model;  // restrict to one roster id
  std::optional<double> epsilon;     // override the attack budget
  bool sweep = false;                // attack: FGSM over the epsilon grid
};

using Logger = std::function<void(const std::string&)>;

// Output layout below out_dir:
//   data/                     dataset container
//   models/<id>.ckpt|.moe|.ens.json
//   noise/<id>.noise          universal perturbations
//   results/*.csv             evaluation records (+ *_raw.csv)
//   report/table.{txt,csv}, report/sweep.csv
class Experiment {
 public:
  explicit Experiment(ExperimentConfig config, Logger logger = {});

  const ExperimentConfig& config() const { return config_; }
  void Run(Stage stage, const StageOptions& options = {});

  void GenerateData();
  void TrainModels(const std::optional<std::string>& only);
  void Attack(const StageOptions& options);
  void Universal(const StageOptions& options);
  void Transfer(const StageOptions& options);
  // Returns the rendered text table.
  std::string Report();

  std::filesystem::path DataDir() const { return config_.out_dir / "data"; }
  std::filesystem::path ModelPath(const std::string& id) const;
  std::filesystem::path NoisePath(const std::string& id) const;
  std::filesystem::path ResultsDir() const { return config_.out_dir / "results"; }
  std::filesystem::path ReportDir() const { return config_.out_dir / "report"; }

  // Loads (and caches) the dataset, checking its config hash.
  const Dataset& dataset();
  // Loads (and caches) a trained roster model, checking its config hash.
  const Model& model(const std::string& id);

 private:
  void Log(const std::string& message) const;
  std::vector<std::string> Selected(const std::optional<std::string>& only) const;
  std::shared_ptr<const SegModel> LoadNet(const std::string& id);
  void CheckMeta(const nlohmann::json& meta, const std::string& what) const;

  ExperimentConfig config_;
  Logger logger_;
  std::optional<Dataset> dataset_;
  std::map<std::string, std::shared_ptr<const SegModel>> nets_;
  std::map<std::string, std::shared_ptr<const Model>> models_;
};

// Renders the robustness table from evaluation records. `records` must hold a
// clean mIoU and fgsm / pgd / universal rows at `epsilon` for each roster id.
struct TableOutput {
  std::string text;
  std::string csv;
};
TableOutput RenderTable(const std::vector<std::string>& roster,
                        const std::vector<EvalRecord>& records, double epsilon,
                        const std::string& pgd_id, const RunStamp& stamp);

}  // namespace segmoe

#endif  // SEGMOE_EXPERIMENT_HPP_
