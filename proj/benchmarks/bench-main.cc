// benchmarks/bench-main.cc

// Copyright 2026  Syncscore Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "syncscore/diar-score.h"
#include "syncscore/dsp.h"
#include "syncscore/sad.h"
#include "syncscore/sync.h"
#include "syncscore/wer.h"

namespace {

using namespace syncscore;

AudioSignal Noise(double seconds, std::uint64_t seed) {
  AudioSignal signal(16000, 1, static_cast<std::int64_t>(seconds * 16000));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 0.3);
  for (auto &v : signal.channels[0]) v = static_cast<float>(dist(rng));
  return signal;
}

void BM_EstimateDelayTrack(benchmark::State &state) {
  const double seconds = static_cast<double>(state.range(0));
  const AudioSignal ref = Noise(seconds, 1);
  const AudioSignal dev = Noise(seconds, 1);
  DelayEstimationOptions opts;
  opts.interval = 5.0;
  opts.window_len = 2.0;
  opts.max_lag = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(EstimateDelayTrack(dev, ref, opts));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(seconds * 16000));
}
BENCHMARK(BM_EstimateDelayTrack)->Arg(60)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_ApplySpeed(benchmark::State &state) {
  const AudioSignal signal = Noise(static_cast<double>(state.range(0)), 2);
  DriftFit fit;
  fit.segments.push_back({0.0, 1e9, 1e-4, 0.01});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ApplySpeed(signal, fit));
  }
  state.SetItemsProcessed(state.iterations() * signal.NumSamples());
}
BENCHMARK(BM_ApplySpeed)->Arg(60)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_AlignWer(benchmark::State &state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> tok(0, 999);
  const auto stream = [&](int n) {
    std::vector<std::string> words(n);
    for (auto &w : words) w = "w" + std::to_string(tok(rng));
    return words;
  };
  const auto ref = stream(static_cast<int>(state.range(0)));
  const auto hyp = stream(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(AlignWer(ref, hyp));
  }
}
BENCHMARK(BM_AlignWer)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_ScoreDiarization(benchmark::State &state) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> onset(0.0, 7200.0);
  std::uniform_real_distribution<double> dur(0.5, 8.0);
  std::uniform_int_distribution<int> spk(1, 4);
  const auto rttm = [&](int n) {
    std::vector<RttmSegment> segments;
    for (int i = 0; i < n; ++i)
      segments.push_back({"rec", onset(rng), dur(rng),
                          "P" + std::to_string(spk(rng))});
    return segments;
  };
  const auto ref = rttm(static_cast<int>(state.range(0)));
  const auto hyp = rttm(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScoreDiarization(ref, hyp));
  }
}
BENCHMARK(BM_ScoreDiarization)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SadDecode(benchmark::State &state) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> dist(0.0, 2.0);
  FramePosteriors post;
  post.frame_shift = 0.01;
  post.speech_logits.resize(static_cast<std::size_t>(state.range(0)));
  for (auto &v : post.speech_logits) v = static_cast<float>(dist(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SadDecode(post));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SadDecode)->Arg(6000)->Arg(60000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
