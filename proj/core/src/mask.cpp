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

#include "bboxcut/mask.hpp"

#include <string>

#include "bboxcut/error.hpp"
#include "bboxcut/random.hpp"

namespace bboxcut {

namespace {

void check_region(const Image& image, const BoundingBox& region) {
  if (region.w < 1 || region.h < 1 || !image.contains(region)) {
    throw ContractViolation("mask region (" + std::to_string(region.x) + ", " +
                            std::to_string(region.y) + ", " + std::to_string(region.w) + ", " +
                            std::to_string(region.h) + ") is empty or outside the " +
                            std::to_string(image.width()) + "x" +
                            std::to_string(image.height()) + " image");
  }
}

}  // namespace

void apply_mask(Image& image, const BoundingBox& region, Rgb color) {
  check_region(image, region);
  for (int y = region.y; y < region.bottom(); ++y) {
    for (int x = region.x; x < region.right(); ++x) image.set(x, y, color);
  }
}

Image apply_mask(const Image& image, const BoundingBox& region, Rgb color) {
  Image out = image;
  apply_mask(out, region, color);
  return out;
}

void fill_noise(Image& image, const BoundingBox& region, RandomStream& rng) {
  check_region(image, region);
  for (int y = region.y; y < region.bottom(); ++y) {
    for (int x = region.x; x < region.right(); ++x) {
      const auto r = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
      const auto g = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
      const auto b = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
      image.set(x, y, {r, g, b});
    }
  }
}

}  // namespace bboxcut
