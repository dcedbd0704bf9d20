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

#include "bboxcut/pipeline.hpp"

#include <exception>

#include "bboxcut/error.hpp"
#include "bboxcut/parallel.hpp"

namespace bboxcut {

PipelineResult run_pipeline(const DatasetManifest& manifest, const AugmentationConfig& config,
                            const std::filesystem::path& out_root, unsigned workers) {
  config.validate();
  const std::vector<std::vector<BoundingBox>> boxes = manifest.boxes_by_image();
  std::vector<std::optional<AugmentationTrace>> traces(manifest.images.size());
  std::vector<std::string> errors(manifest.images.size());

  parallel_for(manifest.images.size(), workers, [&](std::size_t i) {
    try {
      const AnnotatedImage input = load_annotated_image(manifest, i, boxes[i]);
      AugmentationOutcome outcome = augment_seeded(input, config);
      write_output_image(out_root, manifest.images[i], outcome.image);
      traces[i] = std::move(outcome.trace);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  PipelineResult result;
  result.traces = std::move(traces);
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!result.traces[i]) result.failures.push_back({i, manifest.images[i].id, errors[i]});
  }
  result.annotations_path = write_annotations(manifest, out_root);
  return result;
}

}  // namespace bboxcut
