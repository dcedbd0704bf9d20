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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bboxcut/augment.hpp"
#include "bboxcut/dataset_io.hpp"

namespace bboxcut {

struct ImageFailure {
  std::size_t index = 0;
  std::string image_id;
  std::string message;
};

struct PipelineResult {
  /// One entry per manifest image; empty where the image failed.
  std::vector<std::optional<AugmentationTrace>> traces;
  std::vector<ImageFailure> failures;
  std::filesystem::path annotations_path;
};

/// Decode, augment and write every image of `manifest` under `out_root`, then
/// write the annotation file. Images stream through the workers one at a time,
/// so memory stays bounded by the worker count. Per-image failures are
/// collected; the remaining images still run.
PipelineResult run_pipeline(const DatasetManifest& manifest, const AugmentationConfig& config,
                            const std::filesystem::path& out_root, unsigned workers = 1);

}  // namespace bboxcut
