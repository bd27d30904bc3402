// Copyright 2026 The partsemi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <benchmark/benchmark.h>

#include "partsemi/count.hpp"
#include "partsemi/cycles.hpp"
#include "partsemi/enumerate.hpp"
#include "partsemi/membership.hpp"

namespace {

  using namespace partsemi;

  PartitionProfile uniform(std::size_t size, std::size_t blocks) {
    return PartitionProfile({{size, blocks}});
  }

  SetPartition uniform_partition(std::size_t size, std::size_t blocks) {
    std::vector<std::vector<Point>> bs(blocks);
    for (std::size_t i = 0; i < size * blocks; ++i) {
      bs[i % blocks].push_back(static_cast<Point>(i));
    }
    return SetPartition(size * blocks, bs);
  }

  void BM_CountT(benchmark::State& state) {
    auto const profile = uniform(state.range(0), state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(count_t(profile));
    }
  }
  BENCHMARK(BM_CountT)->Arg(4)->Arg(16)->Arg(64);

  void BM_CountSigmaDirect(benchmark::State& state) {
    auto const p = uniform_partition(2, state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(count_sigma_direct(p));
    }
  }
  BENCHMARK(BM_CountSigmaDirect)->DenseRange(3, 8);

  void BM_CountSigmaGrouped(benchmark::State& state) {
    auto const profile
        = PartitionProfile({{1, static_cast<std::size_t>(state.range(0))},
                            {2, static_cast<std::size_t>(state.range(0))}});
    for (auto _ : state) {
      benchmark::DoNotOptimize(count_sigma_grouped(profile));
    }
  }
  BENCHMARK(BM_CountSigmaGrouped)->DenseRange(1, 5);

  void BM_EnumerateSigma(benchmark::State& state) {
    auto const         p = uniform_partition(2, 3);
    EnumerationOptions opts;
    opts.strategy = state.range(0) == 0 ? Strategy::brute : Strategy::constructive;
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_sigma(p, opts));
    }
    state.SetLabel(state.range(0) == 0 ? "brute" : "constructive");
  }
  BENCHMARK(BM_EnumerateSigma)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void BM_InSigma(benchmark::State& state) {
    auto const     p = uniform_partition(4, 4);
    std::vector<Point> images(16);
    for (std::size_t i = 0; i < 16; ++i) {
      images[i] = static_cast<Point>((i + 1) % 16);
    }
    Transformation const f(images);
    for (auto _ : state) {
      benchmark::DoNotOptimize(in_sigma(f, p));
      benchmark::DoNotOptimize(sigma_via_topology(f, p));
    }
  }
  BENCHMARK(BM_InSigma);

  void BM_FindPreservedPartition(benchmark::State& state) {
    std::size_t const  n = state.range(0);
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = static_cast<Point>((i + 1) % n);
    }
    Transformation const f(images);
    for (auto _ : state) {
      benchmark::DoNotOptimize(find_preserved_partition(f));
    }
  }
  BENCHMARK(BM_FindPreservedPartition)->Arg(12)->Arg(101)->Arg(1024);

}  // namespace
