// Copyright 2026 The ultragreed Authors.
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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "ultragreed/field.h"
#include "ultragreed/geg.h"
#include "ultragreed/represent.h"
#include "ultragreed/setsys.h"
#include "ultragreed/ultra.h"

namespace ultragreed {
namespace {

// An n-element triple with w(e) = e and d(e, f) = bit length of e xor f.
UltraTriple BinaryTreeTriple(std::size_t n) {
  std::vector<Label> labels;
  std::vector<std::int64_t> w;
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t e = 0; e < n; ++e) {
    labels.emplace_back(static_cast<std::int64_t>(e));
    w.push_back(static_cast<std::int64_t>(e % 5));
    for (std::size_t f = 0; f < n; ++f) {
      if (e != f) d[e][f] = std::bit_width(e ^ f);
    }
  }
  return UltraTriple::FromMatrix(labels, w, d);
}

VectorFamily RandomFamily(const Field& k, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> codes(n * n);
  for (auto& c : codes) c = rng() % k.order();
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.emplace_back(static_cast<std::int64_t>(i));
  }
  return VectorFamily(k, n, labels, codes);
}

void BM_BhargavaGreedoid(benchmark::State& state) {
  const UltraTriple t = BinaryTreeTriple(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(BhargavaGreedoid(t));
}
BENCHMARK(BM_BhargavaGreedoid)->DenseRange(4, 12, 4);

void BM_GreedySchedule(benchmark::State& state) {
  const UltraTriple t = BinaryTreeTriple(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ComputeGreedySchedule(t));
}
BENCHMARK(BM_GreedySchedule)->RangeMultiplier(2)->Range(8, 64);

void BM_GegEnumerate(benchmark::State& state) {
  const VectorFamily fam = RandomFamily(Field::Make(5), state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(GegEnumerate(fam));
}
BENCHMARK(BM_GegEnumerate)->DenseRange(4, 12, 4);

void BM_BuildRepresentation(benchmark::State& state) {
  const UltraTriple t = BinaryTreeTriple(state.range(0));
  const Field k = Field::FromOrder(
      NextAvailableOrder(std::max<std::size_t>(Mcs(t), 2)));
  for (auto _ : state) benchmark::DoNotOptimize(BuildRepresentation(t, k));
}
BENCHMARK(BM_BuildRepresentation)->DenseRange(4, 16, 4);

void BM_Determinant(benchmark::State& state) {
  const Field k = Field::FromOrder(state.range(1));
  const VectorFamily fam = RandomFamily(k, state.range(0), 11);
  const Matrix<FieldElement> m = fam.AsMatrix();
  for (auto _ : state) benchmark::DoNotOptimize(Determinant(k, m));
}
BENCHMARK(BM_Determinant)->ArgsProduct({{8, 32, 64}, {7, 16}});

}  // namespace
}  // namespace ultragreed

BENCHMARK_MAIN();
