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
#ifndef SEGMOE_DATA_HPP_
#define SEGMOE_DATA_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "segmoe/tensor.hpp"

namespace segmoe {

// Domain A is the "urban-like" scene family (many small objects over a
// textured ground), domain B the "highway-like" one (sky, vegetation and road
// bands with sparse objects under hazy lighting).
enum class Domain : std::uint8_t { kA, kB };
enum class Split : std::uint8_t { kTrain, kVal, kTest };

std::string_view DomainName(Domain d);  // "A" / "B"
std::string_view SplitName(Split s);    // "train" / "val" / "test"
Domain ParseDomain(std::string_view name);
Split ParseSplit(std::string_view name);

// Class ids of the built-in vocabulary. Classes >= kNumBaseClasses are extra
// object classes that only appear in domain A.
namespace cls {
inline constexpr std::uint16_t kGround = 0;
inline constexpr std::uint16_t kRoad = 1;
inline constexpr std::uint16_t kSky = 2;
inline constexpr std::uint16_t kBuilding = 3;
inline constexpr std::uint16_t kVegetation = 4;
inline constexpr std::uint16_t kVehicle = 5;
inline constexpr std::uint16_t kPedestrian = 6;
inline constexpr std::uint16_t kSign = 7;
inline constexpr std::size_t kNumBaseClasses = 8;
}  // namespace cls

std::vector<std::string> DefaultClassNames(std::size_t num_classes);

struct SplitCounts {
  std::size_t train = 64;
  std::size_t val = 16;
  std::size_t test = 32;
  bool operator==(const SplitCounts&) const = default;
};

struct SceneConfig {
  std::size_t height = 64;
  std::size_t width = 64;
  std::size_t num_classes = 8;
  SplitCounts domain_a;
  SplitCounts domain_b;
  std::uint64_t seed = 0;

  void Validate() const;
  nlohmann::json ToJson() const;
  static SceneConfig FromJson(const nlohmann::json& j);
  bool operator==(const SceneConfig&) const = default;
};

// Channel-major [C,H,W] image with values in [0,1].
struct Image {
  std::size_t channels = 3;
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<double> data;
  bool operator==(const Image&) const = default;
};

struct Sample {
  std::string id;
  Domain domain = Domain::kA;
  Split split = Split::kTrain;
  Image image;
  IntMask mask;  // batch = 1
  bool operator==(const Sample&) const = default;
};

using SampleRefs = std::vector<const Sample*>;

class Dataset {
 public:
  SceneConfig config;
  std::vector<std::string> class_names;
  std::vector<Sample> samples;  // ordered: domain, split, index

  std::size_t num_classes() const { return config.num_classes; }
  // Samples of the given splits, optionally restricted to one domain, in
  // storage order.
  SampleRefs Select(std::initializer_list<Split> splits,
                    std::optional<Domain> domain = std::nullopt) const;
  SampleRefs Select(Split split, std::optional<Domain> domain = std::nullopt) const {
    return Select({split}, domain);
  }
  const Sample* Find(std::string_view id) const;
};

std::string SampleId(Domain domain, Split split, std::size_t index);

// Deterministic in (cfg, domain, split, index): each sample draws from its own
// seed stream, so samples can be produced in any order or in parallel.
Sample GenerateSample(const SceneConfig& cfg, Domain domain, Split split, std::size_t index);
Dataset Generate(const SceneConfig& cfg);

// On-disk container (see FORMAT.md): manifest.json, images/<id>.img,
// masks/<id>.lbl. `meta` is stored verbatim under the manifest's "meta" key.
void SaveDataset(const Dataset& dataset, const std::filesystem::path& dir,
                 const nlohmann::json& meta = nlohmann::json::object());
Dataset LoadDataset(const std::filesystem::path& dir, nlohmann::json* meta = nullptr);

void WriteImageFile(const std::filesystem::path& path, const Image& image);
Image ReadImageFile(const std::filesystem::path& path);
void WriteMaskFile(const std::filesystem::path& path, const IntMask& mask);
IntMask ReadMaskFile(const std::filesystem::path& path);

struct Batch {
  Tensor images;  // [N,C,H,W]
  IntMask masks;  // [N,H,W]
};
Batch MakeBatch(std::span<const Sample* const> samples);

}  // namespace segmoe

#endif  // SEGMOE_DATA_HPP_
