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

#include "bboxcut/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bboxcut/color.hpp"
#include "bboxcut/error.hpp"
#include "bboxcut/geometry.hpp"
#include "bboxcut/random.hpp"

namespace bboxcut {

namespace {

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

void CutoutConfig::validate() const {
  if (side < 0) throw ConfigError("cutout side must be >= 1 (or 0 for automatic)");
  if (count < 1) throw ConfigError("cutout count must be >= 1");
  if (!is_probability(apply_probability)) {
    throw ConfigError("cutout apply probability must lie in [0, 1]");
  }
}

void RegionAwareErasingConfig::validate() const {
  const auto [area_min, area_max] = area_range;
  if (!(area_min > 0.0 && area_min <= area_max && area_max <= 1.0)) {
    throw ConfigError("erasing area range must satisfy 0 < min <= max <= 1");
  }
  const auto [aspect_min, aspect_max] = aspect_range;
  if (!(aspect_min > 0.0 && aspect_min <= aspect_max)) {
    throw ConfigError("erasing aspect range must satisfy 0 < min <= max");
  }
  if (!is_probability(apply_probability)) {
    throw ConfigError("erasing apply probability must lie in [0, 1]");
  }
  if (!is_probability(max_box_overlap)) {
    throw ConfigError("erasing max box overlap must lie in [0, 1]");
  }
  if (max_resample_attempts < 1) throw ConfigError("erasing attempts must be >= 1");
}

BaselineResult cutout(const Image& image, const CutoutConfig& config, RandomStream& rng) {
  config.validate();
  if (image.empty()) throw DegenerateInputError("cutout on an empty image");
  const int shorter = std::min(image.width(), image.height());
  const int side = config.side > 0 ? config.side : std::max(1, shorter / 8);
  if (side > shorter) {
    throw ConfigError("cutout side " + std::to_string(side) + " exceeds the shorter image side " +
                      std::to_string(shorter));
  }

  BaselineResult result{image, false, {}};
  if (rng.uniform01() > config.apply_probability) return result;
  result.was_applied = true;
  result.placements.reserve(static_cast<std::size_t>(config.count));
  for (int i = 0; i < config.count; ++i) {
    const int x = static_cast<int>(rng.uniform_int(0, image.width() - side));
    const int y = static_cast<int>(rng.uniform_int(0, image.height() - side));
    const BoundingBox square{x, y, side, side};
    apply_mask(result.image, square, kBlackMask);
    result.placements.push_back({square, std::nullopt, MaskFill::kSolid, kBlackMask});
  }
  return result;
}

BaselineResult region_aware_random_erasing(const AnnotatedImage& input,
                                           const RegionAwareErasingConfig& config,
                                           RandomStream& rng) {
  config.validate();
  const Image& image = input.image;
  if (image.empty()) throw DegenerateInputError("random erasing on an empty image");

  BaselineResult result{image, false, {}};
  if (rng.uniform01() > config.apply_probability) return result;
  result.was_applied = true;

  const double image_area = static_cast<double>(image.pixel_count());
  for (int attempt = 0; attempt < config.max_resample_attempts; ++attempt) {
    const double fraction = rng.uniform_real(config.area_range.first, config.area_range.second);
    const double aspect = rng.uniform_real(config.aspect_range.first, config.aspect_range.second);
    const double area = fraction * image_area;
    const int h = std::clamp(static_cast<int>(std::lround(std::sqrt(area * aspect))), 1,
                             image.height());
    const int w = std::clamp(static_cast<int>(std::lround(std::sqrt(area / aspect))), 1,
                             image.width());
    const int x = static_cast<int>(rng.uniform_int(0, image.width() - w));
    const int y = static_cast<int>(rng.uniform_int(0, image.height() - h));
    const BoundingBox candidate{x, y, w, h};

    const bool overlaps = std::any_of(input.boxes.begin(), input.boxes.end(),
                                      [&](const BoundingBox& box) {
                                        return iou(candidate, box) > config.max_box_overlap;
                                      });
    if (overlaps) continue;

    fill_noise(result.image, candidate, rng);
    result.placements.push_back({candidate, std::nullopt, MaskFill::kNoise, {}});
    break;
  }
  return result;
}

}  // namespace bboxcut
