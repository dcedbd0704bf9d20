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

#include "bboxcut/image_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "bboxcut/error.hpp"

namespace bboxcut {

namespace {

constexpr int kReadFlags = cv::IMREAD_COLOR | cv::IMREAD_IGNORE_ORIENTATION;

Image from_bgr(const cv::Mat& bgr) {
  Image image(bgr.cols, bgr.rows);
  auto out = image.bytes();
  std::size_t k = 0;
  for (int y = 0; y < bgr.rows; ++y) {
    const auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      out[k++] = row[x][2];
      out[k++] = row[x][1];
      out[k++] = row[x][0];
    }
  }
  return image;
}

cv::Mat to_bgr(const Image& image) {
  cv::Mat bgr(image.height(), image.width(), CV_8UC3);
  const auto in = image.bytes();
  std::size_t k = 0;
  for (int y = 0; y < image.height(); ++y) {
    auto* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < image.width(); ++x) {
      row[x][2] = in[k++];
      row[x][1] = in[k++];
      row[x][0] = in[k++];
    }
  }
  return bgr;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string(), path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint32_t be32(const std::uint8_t* p) {
  return (std::uint32_t{p[0]} << 24) | (std::uint32_t{p[1]} << 16) | (std::uint32_t{p[2]} << 8) |
         std::uint32_t{p[3]};
}

std::optional<ImageSize> probe_png(std::ifstream& in) {
  std::array<std::uint8_t, 24> head{};
  in.read(reinterpret_cast<char*>(head.data()), head.size());
  if (in.gcount() != static_cast<std::streamsize>(head.size())) return std::nullopt;
  constexpr std::array<std::uint8_t, 8> kSignature{0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (!std::equal(kSignature.begin(), kSignature.end(), head.begin())) return std::nullopt;
  if (head[12] != 'I' || head[13] != 'H' || head[14] != 'D' || head[15] != 'R') {
    return std::nullopt;
  }
  return ImageSize{static_cast<int>(be32(&head[16])), static_cast<int>(be32(&head[20]))};
}

std::optional<ImageSize> probe_jpeg(std::ifstream& in) {
  auto get = [&]() -> int {
    const int c = in.get();
    return in ? c : -1;
  };
  if (get() != 0xFF || get() != 0xD8) return std::nullopt;
  while (in) {
    int c = get();
    if (c != 0xFF) return std::nullopt;
    do c = get(); while (c == 0xFF);
    if (c < 0) return std::nullopt;
    // Standalone markers carry no length.
    if (c == 0x01 || (c >= 0xD0 && c <= 0xD7)) continue;
    const int hi = get(), lo = get();
    if (hi < 0 || lo < 0) return std::nullopt;
    const int length = (hi << 8) | lo;
    const bool is_sof = c >= 0xC0 && c <= 0xCF && c != 0xC4 && c != 0xC8 && c != 0xCC;
    if (is_sof) {
      std::array<std::uint8_t, 5> sof{};
      in.read(reinterpret_cast<char*>(sof.data()), sof.size());
      if (!in) return std::nullopt;
      const int height = (sof[1] << 8) | sof[2];
      const int width = (sof[3] << 8) | sof[4];
      return ImageSize{width, height};
    }
    if (length < 2) return std::nullopt;
    in.seekg(length - 2, std::ios::cur);
  }
  return std::nullopt;
}

}  // namespace

Image decode_image(std::span<const std::uint8_t> encoded) {
  if (encoded.empty()) throw DegenerateInputError("cannot decode an empty buffer");
  const cv::Mat buffer(1, static_cast<int>(encoded.size()), CV_8UC1,
                       const_cast<std::uint8_t*>(encoded.data()));
  const cv::Mat bgr = cv::imdecode(buffer, kReadFlags);
  if (bgr.empty()) throw DegenerateInputError("buffer is not a decodable image");
  return from_bgr(bgr);
}

Image read_image(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = read_file(path);
  if (bytes.empty()) throw IoError(path.string() + " is empty", path.string());
  const cv::Mat buffer(1, static_cast<int>(bytes.size()), CV_8UC1,
                       const_cast<std::uint8_t*>(bytes.data()));
  const cv::Mat bgr = cv::imdecode(buffer, kReadFlags);
  if (bgr.empty()) throw IoError("cannot decode image " + path.string(), path.string());
  return from_bgr(bgr);
}

std::vector<std::uint8_t> encode_png(const Image& image) {
  if (image.empty()) throw DegenerateInputError("cannot encode an empty image");
  std::vector<std::uint8_t> out;
  const std::vector<int> params{cv::IMWRITE_PNG_COMPRESSION, 3};
  if (!cv::imencode(".png", to_bgr(image), out, params)) {
    throw DegenerateInputError("PNG encoding failed");
  }
  return out;
}

void write_png(const std::filesystem::path& path, const Image& image) {
  const std::vector<std::uint8_t> bytes = encode_png(image);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string(), path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing " + path.string(), path.string());
}

ImageSize probe_image_size(const std::filesystem::path& path) {
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("image file not found: " + path.string(), path.string());
    if (auto size = probe_png(in)) return *size;
  }
  {
    std::ifstream in(path, std::ios::binary);
    if (auto size = probe_jpeg(in)) return *size;
  }
  const Image image = read_image(path);
  return {image.width(), image.height()};
}

}  // namespace bboxcut
