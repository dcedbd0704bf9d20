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
#include <vector>

namespace bboxcut {

class RandomStream;

/// Axis-aligned box in pixel units: left edge `x`, top edge `y`, extent
/// `w` x `h`. Valid boxes have w >= 1 and h >= 1; ingestion enforces that.
struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  int right() const noexcept { return x + w; }
  int bottom() const noexcept { return y + h; }
  std::int64_t area() const noexcept {
    return static_cast<std::int64_t>(w) * static_cast<std::int64_t>(h);
  }
  bool contains(const BoundingBox& inner) const noexcept {
    return inner.x >= x && inner.y >= y && inner.right() <= right() &&
           inner.bottom() <= bottom();
  }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

/// Sub-rectangle of the box at `parent_index` chosen for masking.
struct MaskRegion {
  std::size_t parent_index = 0;
  BoundingBox rect;

  friend bool operator==(const MaskRegion&, const MaskRegion&) = default;
};

/// Area of a ∩ b; zero when they do not overlap.
std::int64_t intersection_area(const BoundingBox& a, const BoundingBox& b) noexcept;

/// Intersection over union in [0, 1].
double iou(const BoundingBox& a, const BoundingBox& b) noexcept;

/// Indices of the boxes whose IoU with every other box is <= `iou_threshold`,
/// in input order. Both members of an over-threshold pair are excluded.
std::vector<std::size_t> non_overlapping_boxes(std::span<const BoundingBox> boxes,
                                               double iou_threshold);

/// Draws a mask region inside `box`. Always consumes four draws, in the order
/// w', h', x', y':
///   w' ~ U{0..round(alpha_w * w)},  h' ~ U{0..round(alpha_h * h)}
///   x' ~ U{x..x + w - w'},          y' ~ U{y..y + h - h'}
/// Returns nullopt when either extent is zero. `parent_index` is copied into
/// the result.
std::optional<MaskRegion> sample_mask_region(const BoundingBox& box, std::size_t parent_index,
                                             double alpha_w, double alpha_h, RandomStream& rng);

}  // namespace bboxcut
