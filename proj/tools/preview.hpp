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

#include <span>
#include <string>

#include "bboxcut/augment.hpp"
#include "bboxcut/geometry.hpp"
#include "bboxcut/image.hpp"

namespace bboxcut::tools {

/// Outline colors of preview overlays.
inline constexpr Rgb kSelectedBoxColor{255, 0, 0};      // box that received a mask
inline constexpr Rgb kUnselectedBoxColor{255, 255, 0};  // any other box
inline constexpr Rgb kMaskOutlineColor{0, 255, 255};    // mask placement

/// 1-pixel outline along the inside edge of `rect`, clipped to the image.
void draw_outline(Image& image, const BoundingBox& rect, Rgb color);

/// The augmented image with unselected boxes, then selected boxes, then mask
/// placements outlined, in that order.
Image render_preview(const Image& augmented, std::span<const BoundingBox> boxes,
                     const AugmentationTrace& trace);

/// JSON legend written next to the preview images.
std::string preview_legend_json();

}  // namespace bboxcut::tools
