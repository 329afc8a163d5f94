// tests/unit/sad-test.cc

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

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "syncscore/sad.h"
#include "test-util.h"

using namespace syncscore;

namespace {

// Exhaustive oracle: enumerate every labeling that satisfies the run-length
// constraints (speech runs >= min_sp frames; internal silence runs >= min_sil
// frames; boundary silences unconstrained) and keep the best total score.
// Speech frames score logits[t], silence frames 0.
struct OracleResult {
  double best = -1e300;
};

// prev: -1 = stream start, 0 = silence, 1 = speech. Runs are maximal, so
// they alternate; every valid labeling is visited exactly once. Speech runs
// are always >= min_sp; silence runs shorter than min_sil are legal only at
// the stream edges.
void EnumerateRuns(const std::vector<float> &logits, int min_sp, int min_sil,
                   std::size_t pos, int prev, double score,
                   const std::vector<double> &suffix_pos, OracleResult *out) {
  const std::size_t n = logits.size();
  if (pos == n) {
    out->best = std::max(out->best, score);
    return;
  }
  // suffix_pos bounds the best achievable remainder; equal-score branches
  // cannot improve the maximum, so they prune too.
  if (score + suffix_pos[pos] <= out->best) return;

  if (prev != 1) {
    for (std::size_t len = static_cast<std::size_t>(min_sp); pos + len <= n;
         ++len) {
      double s = score;
      for (std::size_t i = pos; i < pos + len; ++i) s += logits[i];
      EnumerateRuns(logits, min_sp, min_sil, pos + len, 1, s, suffix_pos, out);
    }
  }
  if (prev != 0) {
    for (std::size_t len = 1; pos + len <= n; ++len) {
      const bool leading = prev == -1;
      const bool trailing = pos + len == n;
      if (!leading && !trailing && len < static_cast<std::size_t>(min_sil))
        continue;
      EnumerateRuns(logits, min_sp, min_sil, pos + len, 0, score, suffix_pos,
                    out);
    }
  }
}

OracleResult OracleDecode(const std::vector<float> &logits, int min_sp,
                          int min_sil) {
  OracleResult out;
  const std::size_t n = logits.size();
  std::vector<double> suffix_pos(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;)
    suffix_pos[i] = suffix_pos[i + 1] + std::max(0.0f, logits[i]);
  out.best = 0.0;  // all-silence is always feasible
  EnumerateRuns(logits, min_sp, min_sil, 0, -1, 0.0, suffix_pos, &out);
  return out;
}

FramePosteriors Posteriors(std::vector<float> logits, double shift = 0.1) {
  FramePosteriors post;
  post.frame_shift = shift;
  post.speech_logits = std::move(logits);
  return post;
}

double SpeechScore(const std::vector<Interval> &intervals,
                   const FramePosteriors &post) {
  double total = 0.0;
  for (std::size_t t = 0; t < post.speech_logits.size(); ++t) {
    const double mid = (static_cast<double>(t) + 0.5) * post.frame_shift;
    for (const Interval &iv : intervals) {
      if (iv.begin <= mid && mid < iv.end) {
        total += post.speech_logits[t];
        break;
      }
    }
  }
  return total;
}

void CheckConstraints(const std::vector<Interval> &intervals,
                      const SadOptions &opts) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    CHECK(intervals[i].Length() >= opts.min_speech - 1e-9);
    if (i > 0) {
      CHECK(intervals[i].begin - intervals[i - 1].end >=
            opts.min_silence - 1e-9);
    }
  }
}

}  // namespace

TEST_CASE("sad decode: all-speech logits give one interval over the file") {
  const auto intervals =
      SadDecode(Posteriors(std::vector<float>(40, 2.0f), 0.01));
  REQUIRE(intervals.size() == 1);
  CHECK(intervals[0].begin == doctest::Approx(0.0));
  CHECK(intervals[0].end == doctest::Approx(0.4));
}

TEST_CASE("sad decode: empty posterior stream gives no intervals") {
  CHECK(SadDecode(Posteriors({})).empty());
}

TEST_CASE("sad decode: a sub-min_silence dip is bridged") {
  // 0.1 s frames: speech [0,1.0), weak dip at [1.0,1.05)... with 0.05 s
  // resolution: use 0.05 s frames. Speech strong except one 0.05 s dip at
  // 1.0 s; min_silence 0.1 s cannot host a 0.05 s silence run.
  std::vector<float> logits;
  for (int t = 0; t < 20; ++t) logits.push_back(3.0f);   // [0, 1.0)
  logits.push_back(-1.0f);                               // dip, 0.05 s
  for (int t = 0; t < 19; ++t) logits.push_back(3.0f);   // [1.05, 2.0)
  SadOptions opts;  // 0.3 s speech, 0.1 s silence
  const auto intervals = SadDecode(Posteriors(std::move(logits), 0.05), opts);
  REQUIRE(intervals.size() == 1);
  CHECK(intervals[0].begin == doctest::Approx(0.0));
  CHECK(intervals[0].end == doctest::Approx(2.0));
}

TEST_CASE("sad decode: an isolated sub-min_speech burst is suppressed") {
  // 0.2 s of speech amid strong silence. Padding the burst to the 0.3 s
  // minimum costs more than the burst scores, so the best path stays
  // silent and no interval shorter than min_speech can ever leak out.
  std::vector<float> logits(30, -6.0f);
  logits[10] = 2.0f;
  logits[11] = 2.0f;  // 0.2 s at 0.1 s frames
  const auto intervals = SadDecode(Posteriors(std::move(logits), 0.1));
  CHECK(intervals.empty());
}

TEST_CASE("sad decode: never violates duration constraints on random input") {
  auto rng = testutil::MakeRng(101);
  std::normal_distribution<double> dist(0.0, 2.0);
  std::uniform_int_distribution<int> len_dist(1, 400);
  SadOptions opts;  // 0.3 / 0.1 at 0.01 s frames -> 30 / 10 frames
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<float> logits(len_dist(rng));
    for (auto &v : logits) v = static_cast<float>(dist(rng));
    const auto intervals = SadDecode(Posteriors(std::move(logits), 0.01), opts);
    CheckConstraints(intervals, opts);
  }
}

TEST_CASE("sad decode: equals exhaustive enumeration on short streams") {
  auto rng = testutil::MakeRng(102);
  std::normal_distribution<double> dist(0.0, 1.5);
  std::uniform_int_distribution<int> len_dist(1, 24);
  SadOptions opts;
  opts.min_speech = 0.3;   // 3 frames at 0.1 s
  opts.min_silence = 0.1;  // 1 frame
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<float> logits(len_dist(rng));
    for (auto &v : logits) v = static_cast<float>(dist(rng));
    const FramePosteriors post = Posteriors(logits, 0.1);
    const auto intervals = SadDecode(post, opts);
    CheckConstraints(intervals, opts);
    const OracleResult oracle =
        OracleDecode(logits, 3, 1);
    CHECK(SpeechScore(intervals, post) == doctest::Approx(oracle.best));
  }
}

TEST_CASE("sad decode: equals enumeration at production frame constraints") {
  auto rng = testutil::MakeRng(103);
  std::normal_distribution<double> dist(0.0, 1.5);
  SadOptions opts;  // 30 / 10 frames at 0.01 s
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<float> logits(50);
    for (auto &v : logits) v = static_cast<float>(dist(rng));
    const FramePosteriors post = Posteriors(logits, 0.01);
    const auto intervals = SadDecode(post, opts);
    CheckConstraints(intervals, opts);
    const OracleResult oracle = OracleDecode(logits, 30, 10);
    CHECK(SpeechScore(intervals, post) == doctest::Approx(oracle.best));
  }
}

TEST_CASE("sad frontend: silence yields no speech, bursts are found") {
  auto rng = testutil::MakeRng(104);
  // 3 s: silence, 1 s noise burst, silence
  AudioSignal signal(16000, 1, 48000);
  std::normal_distribution<double> dist(0.0, 0.3);
  for (std::size_t n = 16000; n < 32000; ++n)
    signal.channels[0][n] = static_cast<float>(dist(rng));
  for (std::size_t n = 0; n < 48000; ++n)
    signal.channels[0][n] += static_cast<float>(1e-4 * dist(rng));
  const FramePosteriors post = EnergySadFrontend(signal);
  const auto intervals = SadDecode(post);
  REQUIRE(intervals.size() == 1);
  CHECK(intervals[0].begin == doctest::Approx(1.0).epsilon(0.1));
  CHECK(intervals[0].end == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("sad frontend: zero signal is all silence, no numeric faults") {
  const AudioSignal zero(16000, 1, 16000);
  const FramePosteriors post = EnergySadFrontend(zero);
  for (const float v : post.speech_logits) CHECK(std::isfinite(v));
  CHECK(SadDecode(post).empty());
}
