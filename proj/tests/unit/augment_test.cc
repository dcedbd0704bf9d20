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

#include "bboxcut/augment.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>

#include "bboxcut/error.hpp"
#include "bboxcut/geometry.hpp"
#include "bboxcut/random.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace bboxcut {
namespace {

AugmentationConfig always() {
  AugmentationConfig c;
  c.p_aug = 1.0;
  c.p_m = 1.0;
  c.alpha_w = 1.0;
  c.alpha_h = 1.0;
  return c;
}

TEST(AugmentConfigTest, DefaultsAreThePublishedValues) {
  const AugmentationConfig c;
  EXPECT_EQ(c.p_aug, 0.3);
  EXPECT_EQ(c.p_m, 0.3);
  EXPECT_EQ(c.alpha_w, 0.3);
  EXPECT_EQ(c.alpha_h, 0.3);
  EXPECT_EQ(c.iou_threshold, 0.5);
  EXPECT_EQ(c.mask_color, MaskColorStrategy::kGlobalDominant);
  EXPECT_EQ(c.method, Method::kBBoxCut);
  EXPECT_NO_THROW(c.validate());
}

TEST(AugmentConfigTest, RejectsOutOfRangeValues) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double bad : {-0.01, 1.5, nan}) {
    for (double AugmentationConfig::*field :
         {&AugmentationConfig::p_aug, &AugmentationConfig::p_m, &AugmentationConfig::alpha_w,
          &AugmentationConfig::alpha_h, &AugmentationConfig::iou_threshold}) {
      AugmentationConfig c;
      c.*field = bad;
      EXPECT_THROW(c.validate(), ConfigError);
    }
  }
  AugmentationConfig c;
  c.cutout.count = 0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(AugmentConfigTest, MethodNamesRoundTrip) {
  for (Method m : {Method::kBBoxCut, Method::kCutout, Method::kRegionAwareRandomErasing,
                   Method::kNone}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  EXPECT_FALSE(parse_method("gridmask"));
}

TEST(AugmentImageTest, ZeroGateIsPassThrough) {
  AugmentationConfig c = always();
  c.p_aug = 0.0;
  for (const AnnotatedImage& input : testing::make_synthetic({.images = 50, .seed = 3})) {
    RandomStream rng(derive_image_seed(1, input.id));
    const AugmentationOutcome out = augment_image(input, c, rng);
    EXPECT_FALSE(out.trace.was_augmented);
    EXPECT_TRUE(out.trace.placements.empty());
    EXPECT_EQ(out.trace.eligible_count, 0U);
    EXPECT_EQ(out.image, input.image);
  }
}

TEST(AugmentImageTest, NoBoxesMeansNothingToMask) {
  const AnnotatedImage input{"a", testing::random_image(30, 20, 1), {}};
  RandomStream rng(0);
  const AugmentationOutcome out = augment_image(input, always(), rng);
  EXPECT_TRUE(out.trace.was_augmented);
  EXPECT_EQ(out.trace.eligible_count, 0U);
  EXPECT_TRUE(out.trace.placements.empty());
  EXPECT_EQ(out.image, input.image);
}

TEST(AugmentImageTest, ChangesConfinedToTheSingleBox) {
  const AnnotatedImage input{"a", Image(64, 64, {200, 180, 20}), {{10, 10, 20, 20}}};
  AugmentationConfig c = always();
  c.mask_color = MaskColorStrategy::kBlack;
  int masked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomStream rng(seed);
    const AugmentationOutcome out = augment_image(input, c, rng);
    for (int y = 0; y < 64; ++y) {
      for (int x = 0; x < 64; ++x) {
        if (out.image.at(x, y) != input.image.at(x, y)) {
          ASSERT_TRUE(x >= 10 && x < 30 && y >= 10 && y < 30) << x << "," << y;
        }
      }
    }
    masked += out.trace.placements.empty() ? 0 : 1;
  }
  EXPECT_GT(masked, 150);
}

TEST(AugmentImageTest, LocalityAndEligibilityOnSyntheticData) {
  const auto data = testing::make_synthetic({.images = 60, .max_boxes = 10, .seed = 11});
  for (MaskColorStrategy strategy :
       {MaskColorStrategy::kBlack, MaskColorStrategy::kGray, MaskColorStrategy::kWhite,
        MaskColorStrategy::kRandom, MaskColorStrategy::kGlobalDominant}) {
    AugmentationConfig c = always();
    c.p_m = 0.7;
    c.alpha_w = 0.6;
    c.alpha_h = 0.6;
    c.mask_color = strategy;
    for (const AnnotatedImage& input : data) {
      RandomStream rng(derive_image_seed(5, input.id));
      const AugmentationOutcome out = augment_image(input, c, rng);
      const auto check = testing::check_locality(input.image, out.image, out.trace.placements);
      ASSERT_TRUE(check.ok()) << input.id;
      const auto eligible = non_overlapping_boxes(input.boxes, c.iou_threshold);
      EXPECT_EQ(out.trace.eligible_count, eligible.size());
      EXPECT_LE(out.trace.placements.size(), out.trace.selected_count);
      EXPECT_LE(out.trace.selected_count, out.trace.eligible_count);
      const std::set<std::size_t> eligible_set(eligible.begin(), eligible.end());
      for (const MaskPlacement& p : out.trace.placements) {
        ASSERT_TRUE(p.parent_index);
        EXPECT_TRUE(eligible_set.count(*p.parent_index));
        EXPECT_TRUE(input.boxes[*p.parent_index].contains(p.rect));
      }
    }
  }
}

TEST(AugmentImageTest, DominantColorComesFromTheOriginalImage) {
  AnnotatedImage input{"d", testing::make_synthetic({.images = 1, .seed = 4})[0].image, {}};
  input.boxes = {{2, 2, 20, 20}, {40, 30, 20, 20}, {70, 5, 20, 20}};
  const Rgb expected = dominant_color(input.image);
  AugmentationConfig c = always();
  RandomStream rng(1);
  const AugmentationOutcome out = augment_image(input, c, rng);
  ASSERT_FALSE(out.trace.placements.empty());
  for (const MaskPlacement& p : out.trace.placements) EXPECT_EQ(p.color, expected);
}

TEST(AugmentImageTest, FollowsDocumentedDrawOrder) {
  // Replays the stream by hand: gate, v_i per eligible box, (w', h', x', y')
  // per selected box, then r, g, b per painted mask.
  const auto data = testing::make_synthetic({.images = 40, .max_boxes = 8, .seed = 21});
  AugmentationConfig c;
  c.p_aug = 0.8;
  c.p_m = 0.6;
  c.alpha_w = 0.5;
  c.alpha_h = 0.4;
  c.mask_color = MaskColorStrategy::kRandom;
  for (const AnnotatedImage& input : data) {
    RandomStream rng(derive_image_seed(9, input.id));
    RandomStream replay = rng;
    const AugmentationOutcome out = augment_image(input, c, rng);

    std::vector<MaskPlacement> expected;
    const bool gate = replay.uniform01() <= c.p_aug;
    ASSERT_EQ(gate, out.trace.was_augmented);
    if (gate) {
      std::vector<std::size_t> selected;
      for (std::size_t i : testing::brute_force_filter(input.boxes, c.iou_threshold)) {
        if (replay.uniform01() <= c.p_m) selected.push_back(i);
      }
      ASSERT_EQ(selected.size(), out.trace.selected_count);
      for (std::size_t i : selected) {
        const BoundingBox& b = input.boxes[i];
        const int w = static_cast<int>(replay.uniform_int(0, std::lround(c.alpha_w * b.w)));
        const int h = static_cast<int>(replay.uniform_int(0, std::lround(c.alpha_h * b.h)));
        const int x = static_cast<int>(replay.uniform_int(b.x, b.x + b.w - w));
        const int y = static_cast<int>(replay.uniform_int(b.y, b.y + b.h - h));
        if (w == 0 || h == 0) continue;
        Rgb color;
        color.r = static_cast<std::uint8_t>(replay.uniform_int(0, 255));
        color.g = static_cast<std::uint8_t>(replay.uniform_int(0, 255));
        color.b = static_cast<std::uint8_t>(replay.uniform_int(0, 255));
        expected.push_back({{x, y, w, h}, i, MaskFill::kSolid, color});
      }
    }
    EXPECT_EQ(out.trace.placements, expected) << input.id;
    EXPECT_EQ(rng.next_u64(), replay.next_u64());
  }
}

TEST(AugmentImageTest, Errors) {
  RandomStream rng(0);
  EXPECT_THROW(augment_image({"e", Image{}, {}}, always(), rng), DegenerateInputError);
  AugmentationConfig bad;
  bad.p_m = 2.0;
  EXPECT_THROW(augment_image({"e", Image(2, 2), {}}, bad, rng), ConfigError);
}

TEST(AugmentImageTest, GateRateMatchesProbability) {
  const AnnotatedImage input{"x", Image(4, 4), {}};
  AugmentationConfig c;
  int augmented = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    RandomStream rng(derive_image_seed(3, std::to_string(i)));
    augmented += augment_image(input, c, rng).trace.was_augmented ? 1 : 0;
  }
  EXPECT_NEAR(static_cast<double>(augmented) / n, 0.3, 0.02);
}

TEST(AugmentSeededTest, NoneIsIdentity) {
  AugmentationConfig c = always();
  c.method = Method::kNone;
  for (const AnnotatedImage& input : testing::make_synthetic({.images = 10, .seed = 2})) {
    const AugmentationOutcome out = augment_seeded(input, c);
    EXPECT_EQ(out.image, input.image);
    EXPECT_EQ(out.trace, AugmentationTrace{});
  }
}

TEST(AugmentSeededTest, DependsOnSeedAndIdOnly) {
  auto data = testing::make_synthetic({.images = 1, .min_boxes = 6, .max_boxes = 6, .seed = 8});
  AugmentationConfig c = always();
  c.seed = 42;
  const AugmentationOutcome a = augment_seeded(data[0], c);
  const AugmentationOutcome b = augment_seeded(data[0], c);
  EXPECT_EQ(a.image, b.image);
  EXPECT_EQ(a.trace, b.trace);
  data[0].id = "other";
  const AugmentationOutcome d = augment_seeded(data[0], c);
  EXPECT_NE(a.trace, d.trace);
}

TEST(AugmentPixelsTest, MatchesSeededAndLeavesBufferAlone) {
  const auto data = testing::make_synthetic({.images = 5, .seed = 6});
  AugmentationConfig c = always();
  c.seed = 7;
  for (const AnnotatedImage& input : data) {
    const std::vector<std::uint8_t> buffer(input.image.bytes().begin(), input.image.bytes().end());
    const std::vector<std::uint8_t> copy = buffer;
    const AugmentationOutcome viaPixels = augment_pixels(
        buffer, input.image.width(), input.image.height(), input.boxes, input.id, c);
    const AugmentationOutcome viaImage = augment_seeded(input, c);
    EXPECT_EQ(viaPixels.image, viaImage.image);
    EXPECT_EQ(viaPixels.trace, viaImage.trace);
    EXPECT_EQ(buffer, copy);
  }
}

TEST(AugmentPixelsTest, RejectsBadShapesAndBoxes) {
  const std::vector<std::uint8_t> buffer(10 * 10 * 3);
  const AugmentationConfig c;
  EXPECT_THROW(augment_pixels(buffer, 10, 9, {}, "a", c), ContractViolation);
  const std::vector<BoundingBox> outside{{5, 5, 10, 2}};
  EXPECT_THROW(augment_pixels(buffer, 10, 10, outside, "a", c), ContractViolation);
}

TEST(AugmentDatasetTest, EmptyDataset) {
  EXPECT_TRUE(augment_dataset({}, AugmentationConfig{}).empty());
}

TEST(AugmentDatasetTest, WorkerCountDoesNotChangeResults) {
  const auto data = testing::make_synthetic({.images = 100, .seed = 12});
  AugmentationConfig c;
  c.p_aug = 0.7;
  c.p_m = 0.7;
  c.seed = 99;
  const auto serial = augment_dataset(data, c, 1);
  const auto parallel = augment_dataset(data, c, 8);
  ASSERT_EQ(serial.size(), data.size());
  ASSERT_EQ(parallel.size(), data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    ASSERT_TRUE(serial[i].ok());
    ASSERT_TRUE(parallel[i].ok());
    EXPECT_EQ(serial[i].outcome->image, parallel[i].outcome->image);
    EXPECT_EQ(serial[i].outcome->trace, parallel[i].outcome->trace);
  }
}

TEST(AugmentDatasetTest, FailuresAreCollectedPerImage) {
  auto data = testing::make_synthetic({.images = 5, .seed = 13});
  data[2].image = Image{};
  const auto results = augment_dataset(data, always(), 4);
  for (std::size_t i = 0; i < data.size(); ++i) {
    EXPECT_EQ(results[i].ok(), i != 2);
  }
  EXPECT_NE(results[2].error.find("no pixels"), std::string::npos);
}

}  // namespace
}  // namespace bboxcut
