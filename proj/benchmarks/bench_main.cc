// Copyright 2026 The Taalwatch Authors.
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

// Micro-benchmarks for the hot paths.

#include <benchmark/benchmark.h>

#include <cmath>
#include <string>
#include <vector>

#include "taalwatch/aggregate.h"
#include "taalwatch/classifier.h"
#include "taalwatch/geo.h"
#include "taalwatch/ingest.h"
#include "taalwatch/lexicon.h"
#include "taalwatch/store.h"
#include "taalwatch/synth.h"
#include "taalwatch/trend.h"

namespace taalwatch {
namespace {

SynthConfig small_stream(int days) {
  SynthConfig cfg;
  cfg.days = days;
  cfg.posts_per_day_mean = 1000;
  return cfg;
}

void BM_Score(benchmark::State& state) {
  const auto posts = generate_posts(small_stream(1));
  const Lexicon& lex = Lexicon::bundled();
  const CosPhraseList& cos = CosPhraseList::bundled();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(score(lex, cos, posts[i].text));
    i = (i + 1) % posts.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Score);

void BM_OlsFit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> xs(n), ys(n);
  SplitMix64 rng(1);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = static_cast<double>(k);
    ys[k] = 3.0 * xs[k] + 10.0 * rng.normal();
  }
  for (auto _ : state) benchmark::DoNotOptimize(ols_fit(xs, ys));
}
BENCHMARK(BM_OlsFit)->Arg(7)->Arg(369);

void BM_BinDaily(benchmark::State& state) {
  const SynthConfig cfg = small_stream(static_cast<int>(state.range(0)));
  const auto posts = generate_posts(cfg);
  std::vector<PolarityObservation> obs;
  for (const auto& p : posts) {
    obs.push_back({p.ts, score(Lexicon::bundled(), CosPhraseList::bundled(), p.text).polarity});
  }
  const DateWindow window{cfg.start, cfg.start + std::chrono::days(cfg.days)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bin(obs, Granularity::kDay, cfg.offset, window));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(obs.size()));
}
BENCHMARK(BM_BinDaily)->Arg(30);

void BM_Haversine(benchmark::State& state) {
  const GeoPoint centre(14.0, 121.0);
  double bearing = 0.0;
  for (auto _ : state) {
    bearing += 0.01;
    benchmark::DoNotOptimize(haversine_km(centre, GeoPoint(14.05 * std::cos(bearing), 121.02)));
  }
}
BENCHMARK(BM_Haversine);

void BM_IngestBatch(benchmark::State& state) {
  const SynthConfig cfg = small_stream(2);
  std::vector<std::string> records;
  for (const auto& p : generate_posts(cfg)) records.push_back(serialize_raw_record(p, cfg.offset));
  for (auto _ : state) {
    Store store = Store::in_memory(cfg.offset);
    benchmark::DoNotOptimize(ingest_batch(records, SourceConfig{}, Lexicon::bundled(),
                                          CosPhraseList::bundled(), store));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(records.size()));
}
BENCHMARK(BM_IngestBatch)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace taalwatch

BENCHMARK_MAIN();
