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

#include "bboxcut/baselines.hpp"

#include <gtest/gtest.h>

#include "bboxcut/error.hpp"
#include "bboxcut/geometry.hpp"
#include "bboxcut/random.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace bboxcut {
namespace {

constexpr Rgb kWhite{255, 255, 255};

TEST(CutoutTest, ZeroProbabilityLeavesImage) {
  const Image image = testing::random_image(32, 32, 1);
  CutoutConfig c;
  c.apply_probability = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    RandomStream rng(s);
    const BaselineResult r = cutout(image, c, rng);
    EXPECT_FALSE(r.was_applied);
    EXPECT_TRUE(r.placements.empty());
    EXPECT_EQ(r.image, image);
  }
}

TEST(CutoutTest, SinglePixelSquare) {
  CutoutConfig c{.side = 1, .count = 1, .apply_probability = 1.0};
  RandomStream rng(4);
  const BaselineResult r = cutout(Image(9, 7, kWhite), c, rng);
  int black = 0, white = 0;
  for (int y = 0; y < 7; ++y) {
    for (int x = 0; x < 9; ++x) {
      const Rgb p = r.image.at(x, y);
      black += p == Rgb{0, 0, 0} ? 1 : 0;
      white += p == kWhite ? 1 : 0;
    }
  }
  EXPECT_EQ(black, 1);
  EXPECT_EQ(white, 62);
}

TEST(CutoutTest, AllSquaresInsideImage) {
  CutoutConfig c{.side = 17, .count = 10000, .apply_probability = 1.0};
  RandomStream rng(5);
  const BaselineResult r = cutout(Image(300, 200), c, rng);
  ASSERT_EQ(r.placements.size(), 10000U);
  for (const MaskPlacement& p : r.placements) {
    ASSERT_TRUE(r.image.contains(p.rect));
    ASSERT_EQ(p.rect.w, 17);
    ASSERT_EQ(p.rect.h, 17);
    ASSERT_FALSE(p.parent_index);
  }
}

TEST(CutoutTest, DefaultSideIsAnEighthOfTheShorterSide) {
  CutoutConfig c;
  c.apply_probability = 1.0;
  RandomStream rng(6);
  const BaselineResult r = cutout(Image(100, 64), c, rng);
  ASSERT_EQ(r.placements.size(), 1U);
  EXPECT_EQ(r.placements[0].rect.w, 8);
  RandomStream tiny(6);
  EXPECT_EQ(cutout(Image(3, 3), c, tiny).placements.at(0).rect.w, 1);
}

TEST(CutoutTest, ZeroInsideAndLocal) {
  const Image image = testing::random_image(64, 48, 9);
  CutoutConfig c{.side = 9, .count = 4, .apply_probability = 1.0};
  RandomStream rng(10);
  const BaselineResult r = cutout(image, c, rng);
  EXPECT_TRUE(testing::check_locality(image, r.image, r.placements).ok());
  for (const MaskPlacement& p : r.placements) {
    for (int y = p.rect.y; y < p.rect.bottom(); ++y) {
      for (int x = p.rect.x; x < p.rect.right(); ++x) {
        ASSERT_EQ(r.image.at(x, y), (Rgb{0, 0, 0}));
      }
    }
  }
}

TEST(CutoutTest, SideLargerThanImageIsAnError) {
  CutoutConfig c{.side = 11, .count = 1, .apply_probability = 1.0};
  RandomStream rng(0);
  EXPECT_THROW(cutout(Image(10, 40), c, rng), ConfigError);
  c.count = 0;
  EXPECT_THROW(cutout(Image(40, 40), c, rng), ConfigError);
}

TEST(RegionErasingTest, VacuousOverlapAcceptsFirstCandidate) {
  AnnotatedImage input{"r", Image(50, 40), {{0, 0, 50, 40}}};
  RegionAwareErasingConfig c;
  c.apply_probability = 1.0;
  c.max_box_overlap = 1.0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    RandomStream rng(s), replay(s);
    const BaselineResult r = region_aware_random_erasing(input, c, rng);
    ASSERT_EQ(r.placements.size(), 1U);
    // Gate plus exactly one candidate's four draws precede the fill.
    (void)replay.uniform01();
    (void)replay.uniform_real(0, 1);
    (void)replay.uniform_real(0, 1);
    const auto& rect = r.placements[0].rect;
    (void)replay.uniform_int(0, 50 - rect.w);
    (void)replay.uniform_int(0, 40 - rect.h);
    Image expected(50, 40);
    fill_noise(expected, rect, replay);
    EXPECT_EQ(r.image, expected);
  }
}

TEST(RegionErasingTest, FullImageBoxBlocksEveryErase) {
  const AnnotatedImage input{"r", testing::random_image(30, 30, 2), {{0, 0, 30, 30}}};
  RegionAwareErasingConfig c;
  c.apply_probability = 1.0;
  c.max_box_overlap = 0.0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    RandomStream rng(s);
    const BaselineResult r = region_aware_random_erasing(input, c, rng);
    EXPECT_TRUE(r.placements.empty());
    EXPECT_EQ(r.image, input.image);
  }
}

TEST(RegionErasingTest, AcceptedPlacementsRespectOverlapCeiling) {
  const auto data = testing::make_synthetic({.images = 200, .max_boxes = 5, .seed = 14});
  RegionAwareErasingConfig c;
  c.apply_probability = 1.0;
  std::size_t accepted = 0;
  for (const AnnotatedImage& input : data) {
    RandomStream rng(derive_image_seed(1, input.id));
    const BaselineResult r = region_aware_random_erasing(input, c, rng);
    EXPECT_TRUE(testing::check_locality(input.image, r.image, r.placements).ok());
    for (const MaskPlacement& p : r.placements) {
      ++accepted;
      EXPECT_EQ(p.fill, MaskFill::kNoise);
      for (const BoundingBox& b : input.boxes) EXPECT_LE(iou(p.rect, b), c.max_box_overlap);
    }
  }
  EXPECT_GT(accepted, 150U);
}

TEST(RegionErasingTest, ConfigValidation) {
  RegionAwareErasingConfig c;
  EXPECT_NO_THROW(c.validate());
  c.area_range = {0.3, 0.2};
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.area_range = {0.0, 0.2};
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.aspect_range = {2.0, 1.0};
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.max_box_overlap = 1.1;
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.max_resample_attempts = 0;
  EXPECT_THROW(c.validate(), ConfigError);
}

}  // namespace
}  // namespace bboxcut
