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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "bboxcut/image.hpp"

namespace bboxcut {

struct ImageSize {
  int width = 0;
  int height = 0;

  friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

/// Decodes any format OpenCV reads into 8-bit RGB. EXIF orientation is
/// ignored so pixel coordinates match the annotation frame.
Image read_image(const std::filesystem::path& path);
Image decode_image(std::span<const std::uint8_t> encoded);

/// Lossless PNG. The same image always encodes to the same bytes.
std::vector<std::uint8_t> encode_png(const Image& image);
void write_png(const std::filesystem::path& path, const Image& image);

/// Reads dimensions from a PNG or JPEG header without decoding pixels; other
/// formats fall back to a full decode.
ImageSize probe_image_size(const std::filesystem::path& path);

}  // namespace bboxcut
