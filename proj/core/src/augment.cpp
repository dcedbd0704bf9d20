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

#include "bboxcut/augment.hpp"

#include <exception>
#include <string>

#include "bboxcut/error.hpp"
#include "bboxcut/geometry.hpp"
#include "bboxcut/parallel.hpp"
#include "bboxcut/random.hpp"

namespace bboxcut {

std::optional<Method> parse_method(std::string_view name) {
  if (name == "bboxcut") return Method::kBBoxCut;
  if (name == "cutout") return Method::kCutout;
  if (name == "region_aware_random_erasing") return Method::kRegionAwareRandomErasing;
  if (name == "none") return Method::kNone;
  return std::nullopt;
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::kBBoxCut: return "bboxcut";
    case Method::kCutout: return "cutout";
    case Method::kRegionAwareRandomErasing: return "region_aware_random_erasing";
    case Method::kNone: return "none";
  }
  return "unknown";
}

namespace {

void require_unit(double value, const char* name) {
  // Written so that NaN fails too.
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ConfigError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
  }
}

}  // namespace

void AugmentationConfig::validate() const {
  require_unit(p_aug, "p_aug");
  require_unit(p_m, "p_m");
  require_unit(alpha_w, "alpha_w");
  require_unit(alpha_h, "alpha_h");
  require_unit(iou_threshold, "iou_threshold");
  cutout.validate();
  region_erasing.validate();
}

AugmentationOutcome augment_image(const AnnotatedImage& input, const AugmentationConfig& config,
                                  RandomStream& rng) {
  config.validate();
  if (input.image.empty()) {
    throw DegenerateInputError("image '" + input.id + "' has no pixels");
  }

  AugmentationOutcome outcome{input.image, {}};
  AugmentationTrace& trace = outcome.trace;
  if (rng.uniform01() > config.p_aug) return outcome;
  trace.was_augmented = true;

  const std::vector<std::size_t> eligible =
      non_overlapping_boxes(input.boxes, config.iou_threshold);
  trace.eligible_count = eligible.size();
  if (eligible.empty()) return outcome;

  // Resolved against the unmasked image.
  const MaskColorResolver colors(config.mask_color, input.image);

  std::vector<std::size_t> selected;
  for (std::size_t index : eligible) {
    if (rng.uniform01() <= config.p_m) selected.push_back(index);
  }
  trace.selected_count = selected.size();

  for (std::size_t index : selected) {
    const std::optional<MaskRegion> region =
        sample_mask_region(input.boxes[index], index, config.alpha_w, config.alpha_h, rng);
    if (!region) continue;
    const Rgb color = colors.next(rng);
    apply_mask(outcome.image, region->rect, color);
    trace.placements.push_back({region->rect, index, MaskFill::kSolid, color});
  }
  return outcome;
}

namespace {

AugmentationOutcome from_baseline(BaselineResult&& result) {
  AugmentationOutcome outcome{std::move(result.image), {}};
  outcome.trace.was_augmented = result.was_applied;
  outcome.trace.placements = std::move(result.placements);
  return outcome;
}

void require_boxes_inside(const AnnotatedImage& input) {
  for (const BoundingBox& box : input.boxes) {
    if (box.w < 1 || box.h < 1 || !input.image.contains(box)) {
      throw ContractViolation("box (" + std::to_string(box.x) + ", " + std::to_string(box.y) +
                              ", " + std::to_string(box.w) + ", " + std::to_string(box.h) +
                              ") is degenerate or outside the image");
    }
  }
}

}  // namespace

AugmentationOutcome augment_seeded(const AnnotatedImage& input, const AugmentationConfig& config) {
  config.validate();
  if (input.image.empty()) {
    throw DegenerateInputError("image '" + input.id + "' has no pixels");
  }
  require_boxes_inside(input);
  RandomStream rng = image_stream(config.seed, input.id);
  switch (config.method) {
    case Method::kBBoxCut:
      return augment_image(input, config, rng);
    case Method::kCutout:
      return from_baseline(cutout(input.image, config.cutout, rng));
    case Method::kRegionAwareRandomErasing:
      return from_baseline(region_aware_random_erasing(input, config.region_erasing, rng));
    case Method::kNone:
      return AugmentationOutcome{input.image, {}};
  }
  throw ConfigError("unknown augmentation method");
}

AugmentationOutcome augment_pixels(std::span<const std::uint8_t> rgb, int width, int height,
                                   std::span<const BoundingBox> boxes, std::string_view image_id,
                                   const AugmentationConfig& config) {
  AnnotatedImage input{std::string(image_id), Image(width, height, rgb),
                       std::vector<BoundingBox>(boxes.begin(), boxes.end())};
  return augment_seeded(input, config);
}

std::vector<ImageResult> augment_dataset(std::span<const AnnotatedImage> dataset,
                                         const AugmentationConfig& config, unsigned workers) {
  config.validate();
  std::vector<ImageResult> results(dataset.size());
  parallel_for(dataset.size(), workers, [&](std::size_t i) {
    try {
      results[i].outcome = augment_seeded(dataset[i], config);
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  });
  return results;
}

}  // namespace bboxcut
