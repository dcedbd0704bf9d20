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

#include "preview.hpp"

#include <algorithm>
#include <vector>

#include <nlohmann/json.hpp>

namespace bboxcut::tools {

void draw_outline(Image& image, const BoundingBox& rect, Rgb color) {
  const int left = std::max(rect.x, 0);
  const int top = std::max(rect.y, 0);
  const int right = std::min(rect.right(), image.width()) - 1;
  const int bottom = std::min(rect.bottom(), image.height()) - 1;
  if (left > right || top > bottom) return;
  for (int x = left; x <= right; ++x) {
    image.set(x, top, color);
    image.set(x, bottom, color);
  }
  for (int y = top; y <= bottom; ++y) {
    image.set(left, y, color);
    image.set(right, y, color);
  }
}

Image render_preview(const Image& augmented, std::span<const BoundingBox> boxes,
                     const AugmentationTrace& trace) {
  std::vector<bool> selected(boxes.size(), false);
  for (const MaskPlacement& p : trace.placements) {
    if (p.parent_index && *p.parent_index < boxes.size()) selected[*p.parent_index] = true;
  }
  Image overlay = augmented;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (!selected[i]) draw_outline(overlay, boxes[i], kUnselectedBoxColor);
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (selected[i]) draw_outline(overlay, boxes[i], kSelectedBoxColor);
  }
  for (const MaskPlacement& p : trace.placements) draw_outline(overlay, p.rect, kMaskOutlineColor);
  return overlay;
}

std::string preview_legend_json() {
  auto rgb = [](Rgb c) { return nlohmann::json::array({c.r, c.g, c.b}); };
  const nlohmann::json legend = {
      {"selected_box", {{"rgb", rgb(kSelectedBoxColor)}, {"meaning", "box that received a mask"}}},
      {"unselected_box", {{"rgb", rgb(kUnselectedBoxColor)}, {"meaning", "box left unmasked"}}},
      {"mask", {{"rgb", rgb(kMaskOutlineColor)}, {"meaning", "outline of a painted mask region"}}},
  };
  return legend.dump(2) + "\n";
}

}  // namespace bboxcut::tools
