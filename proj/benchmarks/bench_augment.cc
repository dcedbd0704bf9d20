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

#include <benchmark/benchmark.h>

#include <vector>

#include "bboxcut/augment.hpp"
#include "bboxcut/color.hpp"
#include "bboxcut/geometry.hpp"
#include "bboxcut/random.hpp"

namespace {

using namespace bboxcut;

std::vector<BoundingBox> random_boxes(std::size_t n, int extent, RandomStream& rng) {
  std::vector<BoundingBox> boxes;
  for (std::size_t i = 0; i < n; ++i) {
    boxes.push_back({static_cast<int>(rng.uniform_int(0, extent * 4)),
                     static_cast<int>(rng.uniform_int(0, extent * 4)),
                     static_cast<int>(rng.uniform_int(1, extent)),
                     static_cast<int>(rng.uniform_int(1, extent))});
  }
  return boxes;
}

Image noise_image(int w, int h, std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(w) * h * 3);
  for (auto& b : bytes) b = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
  return Image(w, h, bytes);
}

void BM_Iou(benchmark::State& state) {
  RandomStream rng(1);
  const auto boxes = random_boxes(1024, 64, rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(iou(boxes[i & 1023], boxes[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_Iou);

void BM_NonOverlappingBoxes(benchmark::State& state) {
  RandomStream rng(2);
  const auto boxes = random_boxes(static_cast<std::size_t>(state.range(0)), 80, rng);
  for (auto _ : state) benchmark::DoNotOptimize(non_overlapping_boxes(boxes, 0.5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NonOverlappingBoxes)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_DominantColor(benchmark::State& state) {
  const Image image = noise_image(1024, 1024, 3);
  for (auto _ : state) benchmark::DoNotOptimize(dominant_color(image));
  state.SetBytesProcessed(state.iterations() * image.pixel_count() * 3);
}
BENCHMARK(BM_DominantColor)->Unit(benchmark::kMillisecond);

// A wheat-like image: 1024x1024 with ~40 heads.
void BM_AugmentImage(benchmark::State& state) {
  RandomStream rng(4);
  const AnnotatedImage input{"bench", noise_image(1024, 1024, 5), random_boxes(40, 200, rng)};
  AugmentationConfig config;
  config.p_aug = 1.0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RandomStream stream(seed++);
    benchmark::DoNotOptimize(augment_image(input, config, stream));
  }
}
BENCHMARK(BM_AugmentImage)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
