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

#include "bboxcut/color.hpp"

#include <algorithm>

#include "bboxcut/error.hpp"
#include "bboxcut/random.hpp"

namespace bboxcut {

ChannelHistogram channel_histogram(const Image& image, Channel channel) {
  if (image.empty()) throw DegenerateInputError("cannot build a histogram of an empty image");
  ChannelHistogram counts{};
  const auto bytes = image.bytes();
  for (std::size_t i = static_cast<std::size_t>(channel); i < bytes.size(); i += 3) {
    ++counts[bytes[i]];
  }
  return counts;
}

namespace {

std::uint8_t argmax(const ChannelHistogram& counts) {
  // max_element returns the first maximum, i.e. the smallest intensity.
  return static_cast<std::uint8_t>(std::max_element(counts.begin(), counts.end()) -
                                   counts.begin());
}

}  // namespace

Rgb dominant_color(const Image& image) {
  if (image.empty()) throw DegenerateInputError("cannot take the dominant color of an empty image");
  // One pass over the raster for all three channels.
  ChannelHistogram r{}, g{}, b{};
  const auto bytes = image.bytes();
  for (std::size_t i = 0; i < bytes.size(); i += 3) {
    ++r[bytes[i]];
    ++g[bytes[i + 1]];
    ++b[bytes[i + 2]];
  }
  return {argmax(r), argmax(g), argmax(b)};
}

std::optional<MaskColorStrategy> parse_mask_color(std::string_view name) {
  if (name == "black") return MaskColorStrategy::kBlack;
  if (name == "gray") return MaskColorStrategy::kGray;
  if (name == "white") return MaskColorStrategy::kWhite;
  if (name == "random") return MaskColorStrategy::kRandom;
  if (name == "global_dominant") return MaskColorStrategy::kGlobalDominant;
  return std::nullopt;
}

std::string_view to_string(MaskColorStrategy strategy) noexcept {
  switch (strategy) {
    case MaskColorStrategy::kBlack: return "black";
    case MaskColorStrategy::kGray: return "gray";
    case MaskColorStrategy::kWhite: return "white";
    case MaskColorStrategy::kRandom: return "random";
    case MaskColorStrategy::kGlobalDominant: return "global_dominant";
  }
  return "unknown";
}

MaskColorResolver::MaskColorResolver(MaskColorStrategy strategy, const Image& image)
    : strategy_(strategy) {
  if (image.empty()) throw DegenerateInputError("cannot resolve a mask color for an empty image");
  switch (strategy) {
    case MaskColorStrategy::kBlack: fixed_ = kBlackMask; break;
    case MaskColorStrategy::kGray: fixed_ = kGrayMask; break;
    case MaskColorStrategy::kWhite: fixed_ = kWhiteMask; break;
    case MaskColorStrategy::kGlobalDominant: fixed_ = dominant_color(image); break;
    case MaskColorStrategy::kRandom: break;
  }
}

Rgb MaskColorResolver::next(RandomStream& rng) const {
  if (strategy_ != MaskColorStrategy::kRandom) return fixed_;
  const auto r = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
  const auto g = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
  const auto b = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
  return {r, g, b};
}

Rgb resolve_mask_color(MaskColorStrategy strategy, const Image& image, RandomStream& rng) {
  return MaskColorResolver(strategy, image).next(rng);
}

}  // namespace bboxcut
