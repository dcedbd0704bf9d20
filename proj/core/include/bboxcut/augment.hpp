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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bboxcut/baselines.hpp"
#include "bboxcut/color.hpp"
#include "bboxcut/image.hpp"
#include "bboxcut/mask.hpp"

namespace bboxcut {

class RandomStream;

enum class Method { kBBoxCut, kCutout, kRegionAwareRandomErasing, kNone };

/// Parses "bboxcut", "cutout", "region_aware_random_erasing" or "none".
std::optional<Method> parse_method(std::string_view name);
std::string_view to_string(Method method) noexcept;

struct AugmentationConfig {
  double p_aug = 0.3;
  double p_m = 0.3;
  double alpha_w = 0.3;
  double alpha_h = 0.3;
  double iou_threshold = 0.5;
  MaskColorStrategy mask_color = MaskColorStrategy::kGlobalDominant;
  Method method = Method::kBBoxCut;
  std::uint64_t seed = 0;

  CutoutConfig cutout;
  RegionAwareErasingConfig region_erasing;

  /// Throws ConfigError naming the first out-of-range field.
  void validate() const;
};

/// Everything about one augmentation except the pixels.
struct AugmentationTrace {
  bool was_augmented = false;
  /// Boxes passing the overlap filter; computed for augmented images only.
  std::size_t eligible_count = 0;
  /// Eligible boxes whose masking draw passed (v_i <= p_m).
  std::size_t selected_count = 0;
  std::vector<MaskPlacement> placements;

  friend bool operator==(const AugmentationTrace&, const AugmentationTrace&) = default;
};

struct AugmentationOutcome {
  Image image;
  AugmentationTrace trace;
};

/// BBoxCut on one image. Draw order on `rng`: gate r; v_i for each eligible box
/// in annotation order; (w', h', x', y') for each selected box; then three
/// color draws per painted mask when the strategy is random. The dominant
/// color comes from the unmasked image. Boxes are never modified.
AugmentationOutcome augment_image(const AnnotatedImage& input, const AugmentationConfig& config,
                                  RandomStream& rng);

/// Runs `config.method` on one image with the stream derived from
/// (config.seed, input.id). This is the unit of work of augment_dataset.
/// Throws ContractViolation for a box that is empty or leaves the image.
AugmentationOutcome augment_seeded(const AnnotatedImage& input, const AugmentationConfig& config);

/// augment_seeded over a caller-owned HxWx3 RGB buffer. The buffer is copied,
/// never written.
AugmentationOutcome augment_pixels(std::span<const std::uint8_t> rgb, int width, int height,
                                   std::span<const BoundingBox> boxes, std::string_view image_id,
                                   const AugmentationConfig& config);

struct ImageResult {
  std::optional<AugmentationOutcome> outcome;
  std::string error;

  bool ok() const noexcept { return outcome.has_value(); }
};

/// Augments every image, in input order, on up to `workers` threads. A failing
/// image yields an ImageResult carrying its error; the rest still run. Output
/// does not depend on `workers`.
std::vector<ImageResult> augment_dataset(std::span<const AnnotatedImage> dataset,
                                         const AugmentationConfig& config, unsigned workers = 1);

}  // namespace bboxcut
