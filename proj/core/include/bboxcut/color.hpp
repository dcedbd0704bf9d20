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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bboxcut/image.hpp"

namespace bboxcut {

class RandomStream;

using ChannelHistogram = std::array<std::uint64_t, 256>;

/// counts[k] = number of pixels whose `channel` intensity is k.
/// Throws DegenerateInputError on an empty image.
ChannelHistogram channel_histogram(const Image& image, Channel channel);

/// Per-channel histogram argmax. Ties go to the smallest intensity.
Rgb dominant_color(const Image& image);

enum class MaskColorStrategy { kBlack, kGray, kWhite, kRandom, kGlobalDominant };

inline constexpr Rgb kBlackMask{0, 0, 0};
inline constexpr Rgb kGrayMask{128, 128, 128};
inline constexpr Rgb kWhiteMask{255, 255, 255};

/// Parses "black", "gray", "white", "random" or "global_dominant".
std::optional<MaskColorStrategy> parse_mask_color(std::string_view name);
std::string_view to_string(MaskColorStrategy strategy) noexcept;

/// Resolves mask colors for one image.
///
/// The dominant color is computed at construction, once per image, and only
/// for the global_dominant strategy. Construct it on the unmasked image.
class MaskColorResolver {
 public:
  MaskColorResolver(MaskColorStrategy strategy, const Image& image);

  /// Color for the next mask. Only the random strategy consumes draws: three,
  /// in r, g, b order.
  Rgb next(RandomStream& rng) const;

  MaskColorStrategy strategy() const noexcept { return strategy_; }

 private:
  MaskColorStrategy strategy_;
  Rgb fixed_{};
};

/// One-shot form of MaskColorResolver.
Rgb resolve_mask_color(MaskColorStrategy strategy, const Image& image, RandomStream& rng);

}  // namespace bboxcut
