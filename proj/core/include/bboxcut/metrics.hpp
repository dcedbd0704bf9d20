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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bboxcut/augment.hpp"
#include "bboxcut/dataset_io.hpp"

namespace bboxcut {

inline constexpr int kReportSchemaVersion = 1;

struct ImageReportRow {
  std::string image_id;
  bool failed = false;
  bool was_augmented = false;
  std::size_t total_boxes = 0;
  std::size_t eligible_boxes = 0;
  std::size_t selected_boxes = 0;
  std::size_t masks_applied = 0;
  /// Placements sampled inside a ground-truth box (all of them for bboxcut,
  /// none for the box-agnostic baselines).
  std::size_t box_masks = 0;
  /// rect area / parent box area, over the box masks.
  std::optional<double> mean_masked_area_fraction;
  std::optional<double> max_masked_area_fraction;

  friend bool operator==(const ImageReportRow&, const ImageReportRow&) = default;
};

struct ReportAggregate {
  std::size_t image_count = 0;
  std::size_t failed_images = 0;
  std::size_t augmented_images = 0;
  std::size_t total_boxes = 0;
  std::size_t eligible_boxes = 0;
  std::size_t selected_boxes = 0;
  std::size_t masks_applied = 0;
  std::size_t dropped_degenerate_boxes = 0;
  /// augmented_images / successful images.
  double augmented_image_fraction = 0.0;
  /// selected_boxes / eligible_boxes: share of eligible boxes drawn for masking.
  double masked_box_fraction = 0.0;
  std::size_t box_masks = 0;
  /// Over every box mask.
  double mean_masked_area_fraction = 0.0;
  double max_masked_area_fraction = 0.0;

  friend bool operator==(const ReportAggregate&, const ReportAggregate&) = default;
};

struct AugmentationReport {
  std::vector<ImageReportRow> per_image;
  ReportAggregate aggregate;
  AugmentationConfig config;
};

/// `traces` aligns with manifest.images; nullopt marks a failed image, which
/// is reported but left out of every aggregate. Throws ContractViolation when
/// the sizes differ.
AugmentationReport build_report(std::span<const std::optional<AugmentationTrace>> traces,
                                const DatasetManifest& manifest,
                                const AugmentationConfig& config);

/// Folds per-image rows into the aggregate. build_report uses exactly this.
ReportAggregate aggregate_rows(std::span<const ImageReportRow> rows, std::size_t dropped_boxes);

std::string report_json(const AugmentationReport& report);

/// Overlap statistics of a dataset's boxes at a given IoU threshold.
struct DatasetStats {
  std::size_t image_count = 0;
  std::size_t box_count = 0;
  double mean_boxes_per_image = 0.0;
  double iou_threshold = 0.5;
  /// Boxes that fail the overlap filter.
  std::size_t excluded_boxes = 0;
  double excluded_fraction = 0.0;
  /// Per image, the largest IoU between any two of its boxes (0 with < 2 boxes).
  std::vector<double> max_pairwise_iou;
  /// max_pairwise_iou bucketed into [0,0.1), [0.1,0.2), ..., [0.9,1.0].
  std::vector<std::size_t> max_iou_histogram;
};

DatasetStats compute_dataset_stats(const DatasetManifest& manifest, double iou_threshold);
std::string stats_json(const DatasetStats& stats);

}  // namespace bboxcut
