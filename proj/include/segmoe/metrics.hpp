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
#ifndef SEGMOE_METRICS_HPP_
#define SEGMOE_METRICS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "segmoe/tensor.hpp"

namespace segmoe {

// K x K pixel counts indexed [ground truth][prediction].
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::size_t num_classes);

  void Add(std::span<const std::uint16_t> truth, std::span<const std::uint16_t> predicted);
  void Add(const IntMask& truth, const IntMask& predicted);
  ConfusionMatrix& operator+=(const ConfusionMatrix& other);

  std::size_t num_classes() const { return k_; }
  std::uint64_t at(std::size_t truth, std::size_t predicted) const {
    return counts_[truth * k_ + predicted];
  }
  std::uint64_t total() const;

  // TP / (TP + FP + FN); nullopt when the class is absent from both truth and
  // prediction.
  std::optional<double> Iou(std::size_t k) const;
  // Mean over present classes. Throws kInvalidArgument on an empty matrix.
  double MeanIou() const;

  bool operator==(const ConfusionMatrix&) const = default;

 private:
  std::size_t k_;
  std::vector<std::uint64_t> counts_;
};

// 100 * (attacked - clean) / clean. Throws kInvalidArgument for clean <= 0.
double DropPct(double clean, double attacked);

// Two-decimal fixed notation without a negative zero ("-0.00" -> "0.00").
std::string FormatFixed2(double value);

struct EvalRecord {
  std::string model;
  std::string attack;
  double epsilon = 0.0;
  double clean_miou = 0.0;     // fraction in [0,1]
  double attacked_miou = 0.0;  // fraction in [0,1]
  double drop_pct = 0.0;
  bool operator==(const EvalRecord&) const = default;
};

EvalRecord MakeRecord(std::string model, std::string attack, double epsilon, double clean,
                      double attacked);

// Provenance line written at the top of every result file.
struct RunStamp {
  std::string config_hash;
  std::uint64_t seed = 0;
  bool operator==(const RunStamp&) const = default;
};

std::string StampLine(const RunStamp& stamp);
// Parses "# config_hash=<hex> seed=<n>"; throws kFormat otherwise.
RunStamp ParseStampLine(const std::string& line);

inline constexpr const char* kRecordsHeader = "model,attack,epsilon,miou_clean,miou_attack,drop_pct";

// Writes `path` (two-decimal mIoU percentages) and `<stem>_raw.csv` next to it
// (full precision). Returns the raw path.
std::filesystem::path WriteRecordsCsv(const std::filesystem::path& path,
                                      std::span<const EvalRecord> records,
                                      const RunStamp& stamp);
std::filesystem::path RawSibling(const std::filesystem::path& path);
// Reads a file written by WriteRecordsCsv (either variant).
std::vector<EvalRecord> ReadRecordsCsv(const std::filesystem::path& path, RunStamp* stamp);

}  // namespace segmoe

#endif  // SEGMOE_METRICS_HPP_
