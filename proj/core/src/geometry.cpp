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

#include "bboxcut/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "bboxcut/random.hpp"

namespace bboxcut {

std::int64_t intersection_area(const BoundingBox& a, const BoundingBox& b) noexcept {
  const std::int64_t w = std::min(a.right(), b.right()) - std::max(a.x, b.x);
  const std::int64_t h = std::min(a.bottom(), b.bottom()) - std::max(a.y, b.y);
  if (w <= 0 || h <= 0) return 0;
  return w * h;
}

double iou(const BoundingBox& a, const BoundingBox& b) noexcept {
  const std::int64_t inter = intersection_area(a, b);
  if (inter == 0) return 0.0;
  const std::int64_t uni = a.area() + b.area() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<std::size_t> non_overlapping_boxes(std::span<const BoundingBox> boxes,
                                               double iou_threshold) {
  std::vector<bool> excluded(boxes.size(), false);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (excluded[i] && excluded[j]) continue;
      if (iou(boxes[i], boxes[j]) > iou_threshold) {
        excluded[i] = true;
        excluded[j] = true;
      }
    }
  }
  std::vector<std::size_t> kept;
  kept.reserve(boxes.size());
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (!excluded[i]) kept.push_back(i);
  }
  return kept;
}

namespace {

int max_extent(double alpha, int extent) {
  // alpha <= 1, so the rounded extent never exceeds the box.
  return static_cast<int>(std::lround(alpha * static_cast<double>(extent)));
}

}  // namespace

std::optional<MaskRegion> sample_mask_region(const BoundingBox& box, std::size_t parent_index,
                                             double alpha_w, double alpha_h, RandomStream& rng) {
  const int w = static_cast<int>(rng.uniform_int(0, max_extent(alpha_w, box.w)));
  const int h = static_cast<int>(rng.uniform_int(0, max_extent(alpha_h, box.h)));
  const int x = static_cast<int>(rng.uniform_int(box.x, box.x + box.w - w));
  const int y = static_cast<int>(rng.uniform_int(box.y, box.y + box.h - h));
  if (w == 0 || h == 0) return std::nullopt;
  return MaskRegion{parent_index, BoundingBox{x, y, w, h}};
}

}  // namespace bboxcut
