// Copyright 2026 The BBoxCut Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace bboxcut {

/// Seeded random stream with platform-independent draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The std distributions are not, so bounded integers and unit
/// reals are derived here from raw engine output. One call to `uniform_int`
/// or `uniform01` is one logical draw.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi]. Requires lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform real in (0, 1] with 53 bits of resolution. Zero is excluded so
  /// a gate `u <= p` never passes for p == 0 and always passes for p == 1.
  double uniform01();

  /// Uniform real in [lo, hi).
  double uniform_real(double lo, double hi);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// 64-bit FNV-1a over the bytes of `text`.
std::uint64_t fnv1a64(std::string_view text) noexcept;

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of the random stream for one image:
///   splitmix64(seed ^ splitmix64(fnv1a64(image_id)))
/// Depends only on its arguments, so results never depend on scheduling.
std::uint64_t derive_image_seed(std::uint64_t seed, std::string_view image_id) noexcept;

inline RandomStream image_stream(std::uint64_t seed, std::string_view image_id) {
  return RandomStream(derive_image_seed(seed, image_id));
}

}  // namespace bboxcut
