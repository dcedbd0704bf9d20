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
#include <span>
#include <string>
#include <vector>

#include "bboxcut/dataset_io.hpp"
#include "bboxcut/image.hpp"

namespace bboxcut::testing {

struct SyntheticOptions {
  std::size_t images = 10;
  int width = 96;
  int height = 64;
  int min_boxes = 0;
  int max_boxes = 6;
  int min_extent = 4;
  int max_extent = 24;
  /// Probability that a new box is placed on top of an earlier one, so the
  /// dataset exercises the overlap filter.
  double overlap_probability = 0.2;
  std::uint64_t seed = 1;
};

/// Images with a noisy dominant background and random boxes. Ids are "1",
/// "2", ..., matching the COCO ids write_coco_dataset assigns.
std::vector<AnnotatedImage> make_synthetic(const SyntheticOptions& options);

/// Uniform random pixels.
Image random_image(int width, int height, std::uint64_t seed);

/// Random box inside a width x height canvas.
BoundingBox random_box(int width, int height, int min_extent, int max_extent,
                       std::uint64_t& state);

/// Writes image i as <dir>/images/img-NNNN.png and a COCO file at
/// <dir>/annotations.json whose image ids are the (integer) AnnotatedImage
/// ids. Returns the annotation path.
std::filesystem::path write_coco_dataset(const std::filesystem::path& dir,
                                         std::span<const AnnotatedImage> images);

/// In-memory manifest equivalent to loading write_coco_dataset's output.
DatasetManifest manifest_for(std::span<const AnnotatedImage> images);

/// Fresh directory under the system temp dir, removed by the destructor.
class TempDir {
 public:
  explicit TempDir(const std::string& prefix);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// Every regular file under `root`, keyed by relative path, with its bytes.
std::vector<std::pair<std::string, std::string>> read_tree(const std::filesystem::path& root);

}  // namespace bboxcut::testing
