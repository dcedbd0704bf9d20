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

#include <utility>
#include <vector>

#include "bboxcut/image.hpp"
#include "bboxcut/mask.hpp"

namespace bboxcut {

class RandomStream;

/// Cutout: zero-valued squares at box-agnostic positions.
struct CutoutConfig {
  /// Square side in pixels. 0 selects max(1, min(width, height) / 8) per image.
  int side = 0;
  int count = 1;
  double apply_probability = 0.3;

  void validate() const;
};

/// Region-aware random erasing: one noise-filled rectangle per image, placed
/// away from ground-truth boxes by rejection sampling.
struct RegionAwareErasingConfig {
  std::pair<double, double> area_range{0.02, 0.2};
  std::pair<double, double> aspect_range{0.3, 3.33};
  double apply_probability = 0.3;
  double max_box_overlap = 0.2;
  int max_resample_attempts = 10;

  void validate() const;
};

struct BaselineResult {
  Image image;
  bool was_applied = false;
  std::vector<MaskPlacement> placements;
};

/// Draw order: gate, then (x, y) per square. Throws ConfigError when the
/// resolved side exceeds the shorter image dimension.
BaselineResult cutout(const Image& image, const CutoutConfig& config, RandomStream& rng);

/// Draw order: gate, then per attempt (area fraction, aspect ratio, x, y), then
/// the noise fill of the accepted rectangle. Candidate extents are rounded
/// and clamped to the image. A candidate is rejected when its IoU with any
/// ground-truth box exceeds `max_box_overlap`; after `max_resample_attempts`
/// rejections nothing is erased.
BaselineResult region_aware_random_erasing(const AnnotatedImage& input,
                                           const RegionAwareErasingConfig& config,
                                           RandomStream& rng);

}  // namespace bboxcut
