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

#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"

#include "bboxcut/augment.hpp"
#include "bboxcut/dataset_io.hpp"
#include "bboxcut/error.hpp"
#include "bboxcut/image_io.hpp"
#include "bboxcut/metrics.hpp"
#include "bboxcut/pipeline.hpp"
#include "preview.hpp"

namespace bboxcut::tools {

namespace fs = std::filesystem;

namespace {

struct Invocation {
  std::string annotations;
  std::string images;
  std::string out;
  std::string json_path;
  std::string method = "bboxcut";
  std::string mask_color = "global_dominant";
  AugmentationConfig config;
  unsigned workers = 1;
  int preview_count = 8;
  bool quiet = false;
  bool verbose = false;
};

const std::vector<std::string> kMethods{"bboxcut", "cutout", "region_aware_random_erasing",
                                        "none"};
const std::vector<std::string> kMaskColors{"black", "gray", "white", "random",
                                           "global_dominant"};

void add_dataset_options(CLI::App& cmd, Invocation& inv, bool needs_out) {
  cmd.add_option("--annotations,-a", inv.annotations, "COCO JSON or CSV annotation file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd.add_option("--images,-i", inv.images,
                 "Directory image file names are relative to (default: annotation file's)")
      ->check(CLI::ExistingDirectory);
  auto* out = cmd.add_option("--out,-o", inv.out, "Output directory");
  if (needs_out) out->required();
  cmd.add_option("--workers,-j", inv.workers, "Worker threads")
      ->envname("BBOXCUT_WORKERS")
      ->check(CLI::Range(1U, 1024U));
  cmd.add_flag("--quiet,-q", inv.quiet, "Suppress warnings");
  cmd.add_flag("--verbose,-v", inv.verbose, "Per-image progress");
}

void add_config_options(CLI::App& cmd, Invocation& inv) {
  AugmentationConfig& c = inv.config;
  cmd.add_option("--p-aug", c.p_aug, "Per-image augmentation probability")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--p-m", c.p_m, "Per-eligible-box masking probability")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--alpha-w", c.alpha_w, "Maximum mask width as a fraction of the box width")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--alpha-h", c.alpha_h, "Maximum mask height as a fraction of the box height")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--iou-thresh", c.iou_threshold, "Boxes overlapping another above this IoU are never masked")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--mask-color", inv.mask_color, "Mask color strategy")
      ->capture_default_str()
      ->check(CLI::IsMember(kMaskColors));
  cmd.add_option("--method", inv.method, "Augmentation method")
      ->capture_default_str()
      ->check(CLI::IsMember(kMethods));
  cmd.add_option("--seed", c.seed, "Random seed")->capture_default_str();

  cmd.add_option("--cutout-side", c.cutout.side, "Cutout square side in pixels (0: 1/8 of the shorter side)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--cutout-count", c.cutout.count, "Cutout squares per image")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--cutout-prob", c.cutout.apply_probability, "Cutout per-image probability")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));

  auto& re = c.region_erasing;
  cmd.add_option("--rae-area-min", re.area_range.first, "Erasing minimum area fraction")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--rae-area-max", re.area_range.second, "Erasing maximum area fraction")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--rae-aspect-min", re.aspect_range.first, "Erasing minimum aspect ratio")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--rae-aspect-max", re.aspect_range.second, "Erasing maximum aspect ratio")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--rae-prob", re.apply_probability, "Erasing per-image probability")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--rae-max-overlap", re.max_box_overlap,
                 "Largest IoU an erased rectangle may have with any box")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--rae-attempts", re.max_resample_attempts, "Erasing placement attempts")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

/// Resolves string-valued flags and cross-field constraints.
void finish(Invocation& inv) {
  inv.config.method = *parse_method(inv.method);
  inv.config.mask_color = *parse_mask_color(inv.mask_color);
  if (inv.images.empty()) {
    inv.images = fs::path(inv.annotations).parent_path().string();
    if (inv.images.empty()) inv.images = ".";
  }
  try {
    inv.config.validate();
  } catch (const ConfigError& e) {
    throw CLI::ValidationError("config", e.what());
  }
}

DatasetManifest load(const Invocation& inv, std::ostream& err) {
  DatasetManifest manifest = load_dataset(inv.annotations, inv.images, {inv.workers});
  if (!inv.quiet) {
    for (const DroppedBox& d : manifest.dropped) {
      err << "warning: image '" << d.image_id << "': dropped box [" << d.x << ", " << d.y << ", "
          << d.w << ", " << d.h << "] (empty after clipping to the image)\n";
    }
  }
  return manifest;
}

void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string(), path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string(), path.string());
}

int cmd_augment(const Invocation& inv, std::ostream& out, std::ostream& err) {
  const DatasetManifest manifest = load(inv, err);
  const fs::path out_root(inv.out);
  const PipelineResult result = run_pipeline(manifest, inv.config, out_root, inv.workers);
  const AugmentationReport report = build_report(result.traces, manifest, inv.config);
  write_text(out_root / kReportFile, report_json(report));

  for (const ImageFailure& f : result.failures) {
    err << "error: image '" << f.image_id << "' (" << manifest.images[f.index].file_name
        << "): " << f.message << "\n";
  }
  const ReportAggregate& a = report.aggregate;
  out << "images: " << a.image_count << " (" << a.augmented_images << " augmented, "
      << a.failed_images << " failed)\n"
      << "boxes: " << a.total_boxes << " (" << a.eligible_boxes << " eligible, "
      << a.selected_boxes << " selected, " << a.masks_applied << " masks painted, "
      << a.dropped_degenerate_boxes << " dropped at load)\n"
      << "wrote " << (out_root / kImagesDir).string() << ", " << result.annotations_path.string()
      << ", " << (out_root / kReportFile).string() << "\n";
  if (!result.failures.empty()) {
    out << "partial output: " << result.failures.size() << " image(s) failed\n";
    return kExitPartialFailure;
  }
  return kExitSuccess;
}

int cmd_preview(const Invocation& inv, std::ostream& out, std::ostream& err) {
  const DatasetManifest manifest = load(inv, err);
  const fs::path dir = fs::path(inv.out) / kPreviewsDir;
  const std::size_t count =
      std::min(manifest.images.size(), static_cast<std::size_t>(inv.preview_count));
  const auto boxes = manifest.boxes_by_image();
  int status = kExitSuccess;
  for (std::size_t i = 0; i < count; ++i) {
    const ImageEntry& entry = manifest.images[i];
    try {
      const AnnotatedImage input = load_annotated_image(manifest, i, boxes[i]);
      const AugmentationOutcome outcome = augment_seeded(input, inv.config);
      const fs::path path = dir / output_file_name(entry.file_name);
      fs::create_directories(path.parent_path());
      write_png(path, render_preview(outcome.image, input.boxes, outcome.trace));
      if (inv.verbose) {
        out << path.string() << ": " << outcome.trace.placements.size() << " mask(s)\n";
      }
    } catch (const std::exception& e) {
      err << "error: image '" << entry.id << "' (" << entry.file_name << "): " << e.what()
          << "\n";
      status = kExitPartialFailure;
    }
  }
  write_text(dir / "legend.json", preview_legend_json());
  out << "wrote " << count << " preview(s) to " << dir.string() << "\n";
  return status;
}

int cmd_stats(const Invocation& inv, std::ostream& out, std::ostream& err) {
  const DatasetManifest manifest = load(inv, err);
  const DatasetStats stats = compute_dataset_stats(manifest, inv.config.iou_threshold);
  out << "images: " << stats.image_count << "\n"
      << "boxes: " << stats.box_count << "\n"
      << "mean boxes per image: " << stats.mean_boxes_per_image << "\n"
      << "dropped at load: " << manifest.dropped.size() << "\n"
      << "excluded at IoU > " << stats.iou_threshold << ": " << stats.excluded_boxes << " ("
      << stats.excluded_fraction << ")\n"
      << "per-image max pairwise IoU:\n";
  for (std::size_t b = 0; b < stats.max_iou_histogram.size(); ++b) {
    out << "  [" << std::fixed << std::setprecision(1) << b / 10.0 << ", " << (b + 1) / 10.0
        << (b + 1 == stats.max_iou_histogram.size() ? "]" : ")") << ": "
        << stats.max_iou_histogram[b] << "\n";
    out.unsetf(std::ios::floatfield);
    out << std::setprecision(6);
  }
  fs::path json_path = inv.json_path;
  if (json_path.empty() && !inv.out.empty()) json_path = fs::path(inv.out) / "stats.json";
  if (!json_path.empty()) write_text(json_path, stats_json(stats));
  return kExitSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Occlusion-simulating box masking for object-detection datasets", "bboxcut"};
  app.require_subcommand(1);

  Invocation inv;
  auto* augment = app.add_subcommand("augment", "Augment a dataset and write images, annotations and a report");
  add_dataset_options(*augment, inv, true);
  add_config_options(*augment, inv);

  auto* preview = app.add_subcommand("preview", "Render box and mask overlays for the first images");
  add_dataset_options(*preview, inv, true);
  add_config_options(*preview, inv);
  preview->add_option("--count,-n", inv.preview_count, "Images to render")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* stats = app.add_subcommand("stats", "Box counts and overlap statistics");
  add_dataset_options(*stats, inv, false);
  stats->add_option("--iou-thresh", inv.config.iou_threshold, "IoU threshold")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  stats->add_option("--json", inv.json_path, "Write statistics JSON here (default: <out>/stats.json)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!stats->parsed()) finish(inv);
    else if (inv.images.empty()) inv.images = fs::path(inv.annotations).parent_path().string();
    if (inv.images.empty()) inv.images = ".";
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (augment->parsed()) return cmd_augment(inv, out, err);
    if (preview->parsed()) return cmd_preview(inv, out, err);
    return cmd_stats(inv, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitPartialFailure;
  }
}

}  // namespace bboxcut::tools
