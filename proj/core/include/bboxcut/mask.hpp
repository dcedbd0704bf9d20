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
#include <optional>

#include "bboxcut/geometry.hpp"
#include "bboxcut/image.hpp"

namespace bboxcut {

class RandomStream;

enum class MaskFill {
  kSolid,  // every pixel set to `color`
  kNoise,  // every channel of every pixel drawn from U{0..255}
};

/// A painted rectangle. `parent_index` names the ground-truth box the region
/// was sampled from; box-agnostic augmentors leave it empty.
struct MaskPlacement {
  BoundingBox rect;
  std::optional<std::size_t> parent_index;
  MaskFill fill = MaskFill::kSolid;
  Rgb color;  // meaningful for kSolid only

  friend bool operator==(const MaskPlacement&, const MaskPlacement&) = default;
};

/// Sets every pixel inside `region` to `color`, leaving the rest untouched.
/// Throws ContractViolation if the region is empty or leaves the image.
void apply_mask(Image& image, const BoundingBox& region, Rgb color);

/// Value-returning form of apply_mask.
Image apply_mask(const Image& image, const BoundingBox& region, Rgb color);

/// Fills `region` with per-pixel uniform noise, three draws per pixel in
/// row-major order. Same preconditions as apply_mask.
void fill_noise(Image& image, const BoundingBox& region, RandomStream& rng);

}  // namespace bboxcut
