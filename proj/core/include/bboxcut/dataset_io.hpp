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
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bboxcut/geometry.hpp"
#include "bboxcut/image.hpp"

namespace bboxcut {

enum class AnnotationFormat { kCoco, kCsv };

struct ImageEntry {
  std::string id;           // stable identifier: COCO id, or the CSV path
  std::string file_name;    // relative to the manifest's image root
  int width = 0;
  int height = 0;
  nlohmann::json raw;       // source record, re-emitted with file_name rewritten

  friend bool operator==(const ImageEntry&, const ImageEntry&) = default;
};

struct Annotation {
  std::size_t image_index = 0;  // into DatasetManifest::images
  BoundingBox box;              // clipped to the image
  nlohmann::json raw;           // source record, re-emitted with bbox rewritten

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

/// A box removed at ingestion because nothing of it survived clipping.
struct DroppedBox {
  std::string image_id;
  double x = 0, y = 0, w = 0, h = 0;  // as written in the source file
};

struct DatasetManifest {
  AnnotationFormat format = AnnotationFormat::kCoco;
  std::filesystem::path image_root;
  std::vector<ImageEntry> images;
  std::vector<Annotation> annotations;
  /// Top-level COCO members other than images/annotations (categories, info,
  /// licenses, ...), passed through untouched.
  nlohmann::json extra = nlohmann::json::object();
  std::vector<DroppedBox> dropped;

  /// Boxes of image `index` in annotation-file order.
  std::vector<BoundingBox> boxes_for(std::size_t index) const;
  /// boxes_for for every image in one pass.
  std::vector<std::vector<BoundingBox>> boxes_by_image() const;
  std::size_t box_count() const noexcept { return annotations.size(); }
};

struct LoadOptions {
  unsigned workers = 1;
};

/// Loads COCO JSON (*.json) or CSV (image_name,x,y,w,h with a header row).
///
/// Boxes are clipped to their image with edges rounded to whole pixels; boxes
/// left with width or height < 1 are dropped and listed in `dropped`.
/// Throws ParseError (with byte offset for malformed JSON), IoError naming
/// the path of a missing image, or ParseError naming an image whose recorded
/// size disagrees with the file.
DatasetManifest load_dataset(const std::filesystem::path& annotation_path,
                             const std::filesystem::path& image_root,
                             const LoadOptions& options = {});

/// Decodes image `index` and pairs it with `boxes`. Throws ParseError when the
/// decoded size no longer matches the manifest.
AnnotatedImage load_annotated_image(const DatasetManifest& manifest, std::size_t index,
                                    std::vector<BoundingBox> boxes);
AnnotatedImage load_annotated_image(const DatasetManifest& manifest, std::size_t index);

/// Output layout under an output root.
inline constexpr const char* kImagesDir = "images";
inline constexpr const char* kAnnotationsFile = "annotations.json";
inline constexpr const char* kReportFile = "report.json";
inline constexpr const char* kPreviewsDir = "previews";

/// `file_name` with its extension replaced by ".png".
std::string output_file_name(const std::string& file_name);

/// Writes `image` to <out_root>/images/<output_file_name>, creating
/// directories as needed. Throws IoError.
std::filesystem::path write_output_image(const std::filesystem::path& out_root,
                                         const ImageEntry& entry, const Image& image);

/// Serialized COCO document for the manifest, with file names rewritten to
/// their PNG outputs and boxes replaced by the clipped ones. Keys are sorted,
/// so equal manifests serialize to equal bytes.
std::string annotations_json(const DatasetManifest& manifest);

/// Writes <out_root>/annotations.json and returns its path.
std::filesystem::path write_annotations(const DatasetManifest& manifest,
                                        const std::filesystem::path& out_root);

struct WriteFailure {
  std::string path;
  std::string message;
};

struct WriteSummary {
  std::filesystem::path annotations_path;
  std::vector<WriteFailure> failures;
  bool partial() const noexcept { return !failures.empty(); }
};

/// Writes every image and the annotation file. `images` aligns with
/// manifest.images. Per-file failures are collected, not thrown.
WriteSummary write_dataset(std::span<const Image> images, const DatasetManifest& manifest,
                           const std::filesystem::path& out_root);

}  // namespace bboxcut
