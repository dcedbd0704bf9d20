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

#include "bboxcut/random.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "stats_util.hpp"

namespace bboxcut {
namespace {

TEST(RandomStreamTest, EngineMatchesStandardSequence) {
  // The standard pins the 10000th output of a default-seeded mt19937_64.
  RandomStream rng(5489);
  std::uint64_t value = 0;
  for (int i = 0; i < 10000; ++i) value = rng.next_u64();
  EXPECT_EQ(value, 9981545732273789042ULL);
}

TEST(RandomStreamTest, UniformIntStaysInBounds) {
  RandomStream rng(7);
  for (int i = 0; i < 100000; ++i) {
    const auto v = rng.uniform_int(-3, 5);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 5);
  }
  EXPECT_EQ(rng.uniform_int(4, 4), 4);
}

TEST(RandomStreamTest, UniformIntIsUniform) {
  RandomStream rng(11);
  std::vector<std::int64_t> counts(13, 0);
  for (int i = 0; i < 130000; ++i) ++counts[rng.uniform_int(0, 12)];
  const double stat = testing::chi_square_uniform(counts);
  EXPECT_GT(testing::chi_square_p_value(stat, 12), 0.001) << "chi2=" << stat;
}

TEST(RandomStreamTest, Uniform01ExcludesZeroIncludesOne) {
  RandomStream rng(3);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    ASSERT_GT(u, 0.0);
    ASSERT_LE(u, 1.0);
  }
}

TEST(RandomStreamTest, UniformRealRange) {
  RandomStream rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform_real(0.3, 3.33);
    ASSERT_GE(u, 0.3);
    ASSERT_LT(u, 3.33);
  }
}

TEST(SeedDerivationTest, DependsOnSeedAndId) {
  EXPECT_EQ(derive_image_seed(42, "17"), derive_image_seed(42, "17"));
  EXPECT_NE(derive_image_seed(42, "17"), derive_image_seed(43, "17"));
  EXPECT_NE(derive_image_seed(42, "17"), derive_image_seed(42, "18"));
  EXPECT_NE(derive_image_seed(0, ""), derive_image_seed(0, "0"));
}

TEST(SeedDerivationTest, Fnv1aReferenceValues) {
  // Published FNV-1a 64 test vectors.
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(SeedDerivationTest, SplitMixReferenceValue) {
  // First output of the reference SplitMix64 generator seeded with 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

}  // namespace
}  // namespace bboxcut
