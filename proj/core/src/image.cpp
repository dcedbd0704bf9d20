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

#include "bboxcut/image.hpp"

#include <string>

#include "bboxcut/error.hpp"

namespace bboxcut {

Image::Image(int width, int height, Rgb fill) : width_(width), height_(height) {
  if (width < 0 || height < 0) {
    throw ContractViolation("image dimensions must be non-negative");
  }
  data_.resize(pixel_count() * 3);
  for (std::size_t i = 0; i < data_.size(); i += 3) {
    data_[i] = fill.r;
    data_[i + 1] = fill.g;
    data_[i + 2] = fill.b;
  }
}

Image::Image(int width, int height, std::span<const std::uint8_t> pixels)
    : width_(width), height_(height) {
  if (width < 0 || height < 0) {
    throw ContractViolation("image dimensions must be non-negative");
  }
  if (pixels.size() != pixel_count() * 3) {
    throw ContractViolation("pixel buffer holds " + std::to_string(pixels.size()) +
                            " bytes, expected " + std::to_string(pixel_count() * 3) + " for " +
                            std::to_string(width) + "x" + std::to_string(height) + " RGB");
  }
  data_.assign(pixels.begin(), pixels.end());
}

bool Image::contains(const BoundingBox& box) const noexcept {
  return box.x >= 0 && box.y >= 0 && box.w >= 0 && box.h >= 0 && box.right() <= width_ &&
         box.bottom() <= height_;
}

}  // namespace bboxcut
