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

#include "bboxcut/dataset_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_map>

#include "bboxcut/error.hpp"
#include "bboxcut/image_io.hpp"
#include "bboxcut/parallel.hpp"

namespace bboxcut {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<BoundingBox> DatasetManifest::boxes_for(std::size_t index) const {
  std::vector<BoundingBox> boxes;
  for (const Annotation& a : annotations) {
    if (a.image_index == index) boxes.push_back(a.box);
  }
  return boxes;
}

std::vector<std::vector<BoundingBox>> DatasetManifest::boxes_by_image() const {
  std::vector<std::vector<BoundingBox>> grouped(images.size());
  for (const Annotation& a : annotations) grouped.at(a.image_index).push_back(a.box);
  return grouped;
}

namespace {

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open annotation file " + path.string(), path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Clips a source box to the image and snaps its edges to whole pixels.
std::optional<BoundingBox> clip_box(double x, double y, double w, double h, int width,
                                    int height) {
  if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(w) && std::isfinite(h))) {
    return std::nullopt;
  }
  const double x0 = std::clamp(x, 0.0, static_cast<double>(width));
  const double y0 = std::clamp(y, 0.0, static_cast<double>(height));
  const double x1 = std::clamp(x + w, 0.0, static_cast<double>(width));
  const double y1 = std::clamp(y + h, 0.0, static_cast<double>(height));
  const auto left = static_cast<int>(std::lround(x0));
  const auto top = static_cast<int>(std::lround(y0));
  const auto right = static_cast<int>(std::lround(x1));
  const auto bottom = static_cast<int>(std::lround(y1));
  if (right - left < 1 || bottom - top < 1) return std::nullopt;
  return BoundingBox{left, top, right - left, bottom - top};
}

std::string id_string(const json& id, const std::string& where) {
  if (id.is_number_unsigned()) return std::to_string(id.get<std::uint64_t>());
  if (id.is_number_integer()) return std::to_string(id.get<std::int64_t>());
  if (id.is_string()) return id.get<std::string>();
  throw ParseError(where + ": id must be an integer or a string");
}

/// Reads every image's size from its file header, on `workers` threads, and
/// checks it against any size recorded in the annotation file.
void resolve_sizes(DatasetManifest& manifest, unsigned workers) {
  std::vector<std::optional<ImageSize>> sizes(manifest.images.size());
  parallel_for(manifest.images.size(), workers, [&](std::size_t i) {
    const fs::path path = manifest.image_root / manifest.images[i].file_name;
    if (!fs::is_regular_file(path)) {
      throw IoError("image file not found: " + path.string(), path.string());
    }
    sizes[i] = probe_image_size(path);
  });
  for (std::size_t i = 0; i < manifest.images.size(); ++i) {
    ImageEntry& entry = manifest.images[i];
    const ImageSize actual = *sizes[i];
    const bool recorded = entry.width > 0 || entry.height > 0;
    if (recorded && (entry.width != actual.width || entry.height != actual.height)) {
      throw ParseError("image '" + entry.id + "' (" + entry.file_name + ") is recorded as " +
                       std::to_string(entry.width) + "x" + std::to_string(entry.height) +
                       " but the file is " + std::to_string(actual.width) + "x" +
                       std::to_string(actual.height));
    }
    entry.width = actual.width;
    entry.height = actual.height;
    entry.raw["width"] = actual.width;
    entry.raw["height"] = actual.height;
  }
}

struct PendingBox {
  std::size_t image_index;
  double x, y, w, h;
  json raw;
};

void clip_all(DatasetManifest& manifest, std::vector<PendingBox>& pending) {
  for (PendingBox& p : pending) {
    const ImageEntry& entry = manifest.images[p.image_index];
    const auto box = clip_box(p.x, p.y, p.w, p.h, entry.width, entry.height);
    if (!box) {
      manifest.dropped.push_back({entry.id, p.x, p.y, p.w, p.h});
      continue;
    }
    p.raw["bbox"] = json::array({box->x, box->y, box->w, box->h});
    manifest.annotations.push_back({p.image_index, *box, std::move(p.raw)});
  }
}

DatasetManifest load_coco(const fs::path& annotation_path, const fs::path& image_root,
                          const LoadOptions& options) {
  const std::string text = read_text(annotation_path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(annotation_path.string() + ": malformed JSON at byte " +
                         std::to_string(e.byte) + ": " + e.what(),
                     e.byte);
  }
  if (!doc.is_object() || !doc.contains("images") || !doc["images"].is_array()) {
    throw ParseError(annotation_path.string() + ": expected an object with an 'images' array");
  }

  DatasetManifest manifest;
  manifest.format = AnnotationFormat::kCoco;
  manifest.image_root = image_root;

  std::unordered_map<std::string, std::size_t> by_id;
  for (const json& record : doc["images"]) {
    const std::string where = annotation_path.string() + ": image " + record.dump();
    if (!record.is_object() || !record.contains("id") || !record.contains("file_name") ||
        !record["file_name"].is_string()) {
      throw ParseError(where + " needs 'id' and 'file_name'");
    }
    ImageEntry entry;
    entry.id = id_string(record["id"], where);
    entry.file_name = record["file_name"].get<std::string>();
    if (record.contains("width") && record["width"].is_number_integer()) {
      entry.width = record["width"].get<int>();
    }
    if (record.contains("height") && record["height"].is_number_integer()) {
      entry.height = record["height"].get<int>();
    }
    entry.raw = record;
    if (!by_id.emplace(entry.id, manifest.images.size()).second) {
      throw ParseError(annotation_path.string() + ": duplicate image id '" + entry.id + "'");
    }
    manifest.images.push_back(std::move(entry));
  }

  std::vector<PendingBox> pending;
  if (doc.contains("annotations")) {
    if (!doc["annotations"].is_array()) {
      throw ParseError(annotation_path.string() + ": 'annotations' must be an array");
    }
    for (const json& record : doc["annotations"]) {
      const std::string where = annotation_path.string() + ": annotation " + record.dump();
      if (!record.is_object() || !record.contains("image_id") || !record.contains("bbox")) {
        throw ParseError(where + " needs 'image_id' and 'bbox'");
      }
      const json& bbox = record["bbox"];
      if (!bbox.is_array() || bbox.size() != 4 ||
          !std::all_of(bbox.begin(), bbox.end(), [](const json& v) { return v.is_number(); })) {
        throw ParseError(where + ": bbox must be [x, y, w, h]");
      }
      const std::string image_id = id_string(record["image_id"], where);
      const auto it = by_id.find(image_id);
      if (it == by_id.end()) {
        throw ParseError(where + " references unknown image id '" + image_id + "'");
      }
      pending.push_back({it->second, bbox[0].get<double>(), bbox[1].get<double>(),
                         bbox[2].get<double>(), bbox[3].get<double>(), record});
    }
  }

  doc.erase("images");
  doc.erase("annotations");
  manifest.extra = std::move(doc);

  resolve_sizes(manifest, options.workers);
  clip_all(manifest, pending);
  return manifest;
}

std::string trim(std::string_view s) {
  auto begin = s.begin();
  auto end = s.end();
  while (begin != end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
  while (end != begin && std::isspace(static_cast<unsigned char>(*(end - 1)))) --end;
  return {begin, end};
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(const std::string& field, const std::string& where, std::size_t offset) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != field.size()) {
    throw ParseError(where + ": '" + field + "' is not a number", offset);
  }
  return value;
}

DatasetManifest load_csv(const fs::path& annotation_path, const fs::path& image_root,
                         const LoadOptions& options) {
  const std::string text = read_text(annotation_path);

  DatasetManifest manifest;
  manifest.format = AnnotationFormat::kCsv;
  manifest.image_root = image_root;
  manifest.extra["categories"] = json::array({{{"id", 1}, {"name", "object"}}});

  std::unordered_map<std::string, std::size_t> by_name;
  auto image_index = [&](const std::string& name) {
    auto [it, inserted] = by_name.emplace(name, manifest.images.size());
    if (inserted) {
      ImageEntry entry;
      entry.id = name;
      entry.file_name = name;
      entry.raw = {{"id", manifest.images.size() + 1}, {"file_name", name}};
      manifest.images.push_back(std::move(entry));
    }
    return it->second;
  };

  std::vector<PendingBox> pending;
  std::size_t offset = 0;
  std::size_t line_number = 0;
  bool saw_header = false;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + offset, end - offset);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t line_offset = offset;
    offset = end + 1;
    ++line_number;
    if (trim(line).empty()) continue;

    const std::string where = annotation_path.string() + ":" + std::to_string(line_number);
    const std::vector<std::string> fields = split_fields(line);
    if (!saw_header) {
      const std::vector<std::string> expected{"image_name", "x", "y", "w", "h"};
      if (fields != expected) {
        throw ParseError(where + ": expected header 'image_name,x,y,w,h'", line_offset);
      }
      saw_header = true;
      continue;
    }
    if (fields.size() != 5 || fields[0].empty()) {
      throw ParseError(where + ": expected 5 fields", line_offset);
    }
    const std::size_t index = image_index(fields[0]);
    // A row with empty coordinates registers an image without boxes.
    if (std::all_of(fields.begin() + 1, fields.end(), [](const auto& f) { return f.empty(); })) {
      continue;
    }
    const double x = parse_number(fields[1], where, line_offset);
    const double y = parse_number(fields[2], where, line_offset);
    const double w = parse_number(fields[3], where, line_offset);
    const double h = parse_number(fields[4], where, line_offset);
    json raw = {{"id", pending.size() + 1},
                {"image_id", manifest.images[index].raw["id"]},
                {"category_id", 1}};
    pending.push_back({index, x, y, w, h, std::move(raw)});
  }
  if (!saw_header) {
    throw ParseError(annotation_path.string() + ": missing header 'image_name,x,y,w,h'", 0);
  }

  resolve_sizes(manifest, options.workers);
  clip_all(manifest, pending);
  return manifest;
}

}  // namespace

DatasetManifest load_dataset(const fs::path& annotation_path, const fs::path& image_root,
                             const LoadOptions& options) {
  std::string ext = annotation_path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".csv") return load_csv(annotation_path, image_root, options);
  return load_coco(annotation_path, image_root, options);
}

AnnotatedImage load_annotated_image(const DatasetManifest& manifest, std::size_t index,
                                    std::vector<BoundingBox> boxes) {
  const ImageEntry& entry = manifest.images.at(index);
  Image image = read_image(manifest.image_root / entry.file_name);
  if (image.width() != entry.width || image.height() != entry.height) {
    throw ParseError("image '" + entry.id + "' (" + entry.file_name + ") decoded as " +
                     std::to_string(image.width()) + "x" + std::to_string(image.height()) +
                     ", manifest says " + std::to_string(entry.width) + "x" +
                     std::to_string(entry.height));
  }
  return {entry.id, std::move(image), std::move(boxes)};
}

AnnotatedImage load_annotated_image(const DatasetManifest& manifest, std::size_t index) {
  return load_annotated_image(manifest, index, manifest.boxes_for(index));
}

std::string output_file_name(const std::string& file_name) {
  fs::path path(file_name);
  path.replace_extension(".png");
  return path.generic_string();
}

fs::path write_output_image(const fs::path& out_root, const ImageEntry& entry,
                            const Image& image) {
  const fs::path path = out_root / kImagesDir / output_file_name(entry.file_name);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) {
    throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message(),
                  path.parent_path().string());
  }
  write_png(path, image);
  return path;
}

std::string annotations_json(const DatasetManifest& manifest) {
  json doc = manifest.extra.is_object() ? manifest.extra : json::object();
  json images = json::array();
  for (const ImageEntry& entry : manifest.images) {
    json record = entry.raw;
    record["file_name"] = output_file_name(entry.file_name);
    record["width"] = entry.width;
    record["height"] = entry.height;
    images.push_back(std::move(record));
  }
  json annotations = json::array();
  for (const Annotation& a : manifest.annotations) {
    json record = a.raw;
    record["bbox"] = json::array({a.box.x, a.box.y, a.box.w, a.box.h});
    annotations.push_back(std::move(record));
  }
  doc["images"] = std::move(images);
  doc["annotations"] = std::move(annotations);
  return doc.dump(2) + "\n";
}

fs::path write_annotations(const DatasetManifest& manifest, const fs::path& out_root) {
  std::error_code ec;
  fs::create_directories(out_root, ec);
  const fs::path path = out_root / kAnnotationsFile;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string(), path.string());
  out << annotations_json(manifest);
  if (!out) throw IoError("failed writing " + path.string(), path.string());
  return path;
}

WriteSummary write_dataset(std::span<const Image> images, const DatasetManifest& manifest,
                           const fs::path& out_root) {
  if (images.size() != manifest.images.size()) {
    throw ContractViolation("write_dataset got " + std::to_string(images.size()) +
                            " images for a manifest of " +
                            std::to_string(manifest.images.size()));
  }
  WriteSummary summary;
  for (std::size_t i = 0; i < images.size(); ++i) {
    try {
      write_output_image(out_root, manifest.images[i], images[i]);
    } catch (const std::exception& e) {
      summary.failures.push_back(
          {(out_root / kImagesDir / output_file_name(manifest.images[i].file_name)).string(),
           e.what()});
    }
  }
  try {
    summary.annotations_path = write_annotations(manifest, out_root);
  } catch (const IoError& e) {
    summary.failures.push_back({e.path(), e.what()});
  }
  return summary;
}

}  // namespace bboxcut
