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

#include "bboxcut/metrics.hpp"

#include <algorithm>
#include <string>

#include <nlohmann/json.hpp>

#include "bboxcut/error.hpp"
#include "bboxcut/geometry.hpp"

namespace bboxcut {

using nlohmann::json;

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

ReportAggregate aggregate_rows(std::span<const ImageReportRow> rows, std::size_t dropped_boxes) {
  ReportAggregate agg;
  agg.image_count = rows.size();
  agg.dropped_degenerate_boxes = dropped_boxes;
  double area_sum = 0.0;
  for (const ImageReportRow& row : rows) {
    if (row.failed) {
      ++agg.failed_images;
      continue;
    }
    agg.augmented_images += row.was_augmented ? 1 : 0;
    agg.total_boxes += row.total_boxes;
    agg.eligible_boxes += row.eligible_boxes;
    agg.selected_boxes += row.selected_boxes;
    agg.masks_applied += row.masks_applied;
    agg.box_masks += row.box_masks;
    if (row.mean_masked_area_fraction) {
      area_sum += *row.mean_masked_area_fraction * static_cast<double>(row.box_masks);
      agg.max_masked_area_fraction =
          std::max(agg.max_masked_area_fraction, row.max_masked_area_fraction.value_or(0.0));
    }
  }
  agg.augmented_image_fraction = ratio(agg.augmented_images, agg.image_count - agg.failed_images);
  agg.masked_box_fraction = ratio(agg.selected_boxes, agg.eligible_boxes);
  agg.mean_masked_area_fraction =
      agg.box_masks == 0 ? 0.0 : area_sum / static_cast<double>(agg.box_masks);
  return agg;
}

AugmentationReport build_report(std::span<const std::optional<AugmentationTrace>> traces,
                                const DatasetManifest& manifest,
                                const AugmentationConfig& config) {
  if (traces.size() != manifest.images.size()) {
    throw ContractViolation("report got " + std::to_string(traces.size()) +
                            " outcomes for a manifest of " +
                            std::to_string(manifest.images.size()) + " images");
  }
  const std::vector<std::vector<BoundingBox>> boxes = manifest.boxes_by_image();

  AugmentationReport report;
  report.config = config;
  report.per_image.reserve(traces.size());
  for (std::size_t i = 0; i < traces.size(); ++i) {
    ImageReportRow row;
    row.image_id = manifest.images[i].id;
    row.total_boxes = boxes[i].size();
    if (!traces[i]) {
      row.failed = true;
      report.per_image.push_back(std::move(row));
      continue;
    }
    const AugmentationTrace& trace = *traces[i];
    row.was_augmented = trace.was_augmented;
    row.eligible_boxes = trace.eligible_count;
    row.selected_boxes = trace.selected_count;
    row.masks_applied = trace.placements.size();

    double sum = 0.0, max = 0.0;
    for (const MaskPlacement& p : trace.placements) {
      if (!p.parent_index) continue;
      const BoundingBox& parent = boxes[i].at(*p.parent_index);
      const double fraction =
          static_cast<double>(p.rect.area()) / static_cast<double>(parent.area());
      sum += fraction;
      max = std::max(max, fraction);
      ++row.box_masks;
    }
    if (row.box_masks > 0) {
      row.mean_masked_area_fraction = sum / static_cast<double>(row.box_masks);
      row.max_masked_area_fraction = max;
    }
    report.per_image.push_back(std::move(row));
  }
  report.aggregate = aggregate_rows(report.per_image, manifest.dropped.size());
  return report;
}

namespace {

json optional_number(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

json config_json(const AugmentationConfig& c) {
  return {
      {"p_aug", c.p_aug},
      {"p_m", c.p_m},
      {"alpha_w", c.alpha_w},
      {"alpha_h", c.alpha_h},
      {"iou_threshold", c.iou_threshold},
      {"mask_color", std::string(to_string(c.mask_color))},
      {"method", std::string(to_string(c.method))},
      {"seed", c.seed},
      {"cutout",
       {{"side", c.cutout.side},
        {"count", c.cutout.count},
        {"apply_probability", c.cutout.apply_probability}}},
      {"region_aware_random_erasing",
       {{"area_range", {c.region_erasing.area_range.first, c.region_erasing.area_range.second}},
        {"aspect_range",
         {c.region_erasing.aspect_range.first, c.region_erasing.aspect_range.second}},
        {"apply_probability", c.region_erasing.apply_probability},
        {"max_box_overlap", c.region_erasing.max_box_overlap},
        {"max_resample_attempts", c.region_erasing.max_resample_attempts}}},
  };
}

}  // namespace

std::string report_json(const AugmentationReport& report) {
  json rows = json::array();
  for (const ImageReportRow& row : report.per_image) {
    rows.push_back({
        {"image_id", row.image_id},
        {"failed", row.failed},
        {"was_augmented", row.was_augmented},
        {"total_boxes", row.total_boxes},
        {"eligible_boxes", row.eligible_boxes},
        {"selected_boxes", row.selected_boxes},
        {"masks_applied", row.masks_applied},
        {"box_masks", row.box_masks},
        {"mean_masked_area_fraction", optional_number(row.mean_masked_area_fraction)},
        {"max_masked_area_fraction", optional_number(row.max_masked_area_fraction)},
    });
  }
  const ReportAggregate& a = report.aggregate;
  json doc = {
      {"schema_version", kReportSchemaVersion},
      {"config", config_json(report.config)},
      {"aggregate",
       {
           {"image_count", a.image_count},
           {"failed_images", a.failed_images},
           {"augmented_images", a.augmented_images},
           {"augmented_image_fraction", a.augmented_image_fraction},
           {"total_boxes", a.total_boxes},
           {"eligible_boxes", a.eligible_boxes},
           {"selected_boxes", a.selected_boxes},
           {"masked_box_fraction", a.masked_box_fraction},
           {"masks_applied", a.masks_applied},
           {"box_masks", a.box_masks},
           {"mean_masked_area_fraction", a.mean_masked_area_fraction},
           {"max_masked_area_fraction", a.max_masked_area_fraction},
           {"dropped_degenerate_boxes", a.dropped_degenerate_boxes},
       }},
      {"per_image", std::move(rows)},
  };
  return doc.dump(2) + "\n";
}

DatasetStats compute_dataset_stats(const DatasetManifest& manifest, double iou_threshold) {
  if (!(iou_threshold >= 0.0 && iou_threshold <= 1.0)) {
    throw ConfigError("iou_threshold must lie in [0, 1]");
  }
  DatasetStats stats;
  stats.iou_threshold = iou_threshold;
  stats.image_count = manifest.images.size();
  stats.box_count = manifest.box_count();
  stats.mean_boxes_per_image = ratio(stats.box_count, stats.image_count);
  stats.max_iou_histogram.assign(10, 0);

  for (const std::vector<BoundingBox>& boxes : manifest.boxes_by_image()) {
    stats.excluded_boxes += boxes.size() - non_overlapping_boxes(boxes, iou_threshold).size();
    double max_iou = 0.0;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      for (std::size_t j = i + 1; j < boxes.size(); ++j) {
        max_iou = std::max(max_iou, iou(boxes[i], boxes[j]));
      }
    }
    stats.max_pairwise_iou.push_back(max_iou);
    ++stats.max_iou_histogram[std::min<std::size_t>(9, static_cast<std::size_t>(max_iou * 10.0))];
  }
  stats.excluded_fraction = ratio(stats.excluded_boxes, stats.box_count);
  return stats;
}

std::string stats_json(const DatasetStats& stats) {
  json doc = {
      {"schema_version", kReportSchemaVersion},
      {"image_count", stats.image_count},
      {"box_count", stats.box_count},
      {"mean_boxes_per_image", stats.mean_boxes_per_image},
      {"iou_threshold", stats.iou_threshold},
      {"excluded_boxes", stats.excluded_boxes},
      {"excluded_fraction", stats.excluded_fraction},
      {"max_pairwise_iou_histogram", stats.max_iou_histogram},
      {"max_pairwise_iou", stats.max_pairwise_iou},
  };
  return doc.dump(2) + "\n";
}

}  // namespace bboxcut
