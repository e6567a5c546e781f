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
#ifndef SEGMOE_UTIL_HPP_
#define SEGMOE_UTIL_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace segmoe {

std::uint64_t Fnv1a64(std::span<const std::uint8_t> bytes,
                      std::uint64_t basis = 0xcbf29ce484222325ULL);
std::uint64_t Fnv1a64(std::string_view text);
std::string HexDigest(std::uint64_t value);
std::uint64_t HashFile(const std::filesystem::path& path);

// Named sub-stream of a top-level seed; different names give independent
// streams, the same name always gives the same stream.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view name);

// Seeded generator with distribution code that is identical on every
// standard library (std:: distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // [0, 1) with 53 random bits.
  double Uniform();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Integer in [0, n).
  std::uint64_t Below(std::uint64_t n);
  double Normal();
  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Little-endian binary helpers shared by the on-disk formats.
namespace io {

void WriteMagic(std::ostream& os, std::string_view magic);
void ExpectMagic(std::istream& is, std::string_view magic, const std::string& where);
void WriteU16(std::ostream& os, std::uint16_t v);
void WriteU32(std::ostream& os, std::uint32_t v);
void WriteF64(std::ostream& os, double v);
void WriteF64s(std::ostream& os, std::span<const double> values);
std::uint16_t ReadU16(std::istream& is, const std::string& where);
std::uint32_t ReadU32(std::istream& is, const std::string& where);
double ReadF64(std::istream& is, const std::string& where);
void ReadF64s(std::istream& is, std::span<double> out, const std::string& where);
// u32 byte length followed by UTF-8 bytes.
void WriteString(std::ostream& os, std::string_view text);
std::string ReadString(std::istream& is, const std::string& where,
                       std::uint32_t max_len = 1u << 26);
// Errors with kFormat unless the stream is exhausted.
void ExpectEnd(std::istream& is, const std::string& where);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace io

}  // namespace segmoe

#endif  // SEGMOE_UTIL_HPP_
