// tests/unit/embed-ahc-test.cc

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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include <doctest.h>

#include "syncscore/ahc.h"
#include "syncscore/embed.h"
#include "syncscore/error.h"
#include "test-util.h"

using namespace syncscore;

TEST_CASE("embed: identical audio gives identical embeddings") {
  const AudioSignal tone = testutil::Tone(800.0, 4.0);
  const auto embeddings =
      EmbedSegments(tone, {{0.0, 1.5}, {2.0, 3.5}});
  REQUIRE(embeddings.size() == 2);
  REQUIRE(embeddings[0].vector.size() == embeddings[1].vector.size());
  for (std::size_t d = 0; d < embeddings[0].vector.size(); ++d) {
    CHECK(embeddings[0].vector[d] ==
          doctest::Approx(embeddings[1].vector[d]).epsilon(1e-5));
  }
}

TEST_CASE("embed: distinct tones are far apart in cosine distance") {
  AudioSignal signal = testutil::Tone(440.0, 2.0);
  const AudioSignal high = testutil::Tone(3000.0, 2.0);
  signal.channels[0].insert(signal.channels[0].end(),
                            high.channels[0].begin(),
                            high.channels[0].end());
  const auto embeddings =
      EmbedSegments(signal, {{0.0, 1.5}, {2.0, 3.5}});
  REQUIRE(embeddings.size() == 2);
  CHECK(CosineDistance(embeddings[0].vector, embeddings[1].vector) > 0.5);
}

TEST_CASE("embed: zero signal yields a defined vector") {
  const AudioSignal zero(16000, 1, 32000);
  const auto embeddings = EmbedSegments(zero, {{0.0, 1.5}});
  REQUIRE(embeddings.size() == 1);
  for (const float v : embeddings[0].vector) CHECK(std::isfinite(v));
}

TEST_CASE("embed: sub-frame intervals are skipped with a warning") {
  const AudioSignal tone = testutil::Tone(500.0, 1.0);
  std::vector<std::string> warnings;
  const auto embeddings =
      EmbedSegments(tone, {{0.0, 0.01}}, {}, &warnings);
  CHECK(embeddings.empty());
  CHECK(warnings.size() == 1);
}

TEST_CASE("embed: long intervals are split into hopped subsegments") {
  const AudioSignal tone = testutil::Tone(700.0, 5.0);
  const auto embeddings = EmbedSegments(tone, {{0.0, 4.5}});
  // windows 1.5 s every 0.75 s: starts 0, .75, 1.5, 2.25, 3.0 -> 5
  CHECK(embeddings.size() == 5);
  for (const auto &e : embeddings) {
    CHECK(e.segment.offset - e.segment.onset ==
          doctest::Approx(1.5).epsilon(1e-6));
  }
}

TEST_CASE("ahc: requesting more clusters than points fails") {
  CHECK_THROWS_AS(AhcCluster({{1.0f, 0.0f}}, 2), ArgumentError);
}

TEST_CASE("ahc: num_clusters == n gives singletons, 1 gives one cluster") {
  const std::vector<std::vector<float>> points = {
      {1.0f, 0.0f}, {0.0f, 1.0f}, {0.7f, 0.7f}};
  const auto singletons = AhcCluster(points, 3);
  CHECK(singletons == std::vector<int>{0, 1, 2});
  const auto one = AhcCluster(points, 1);
  CHECK(one == std::vector<int>{0, 0, 0});
}

TEST_CASE("ahc: well-separated directions cluster correctly") {
  auto rng = testutil::MakeRng(111);
  std::normal_distribution<double> jitter(0.0, 0.02);
  std::vector<std::vector<float>> points;
  std::vector<int> truth;
  const std::vector<std::vector<float>> centers = {
      {1.0f, 0.0f, 0.0f}, {0.0f, 1.0f, 0.0f}, {0.0f, 0.0f, 1.0f}};
  for (int i = 0; i < 30; ++i) {
    const int c = i % 3;
    std::vector<float> p = centers[c];
    for (auto &v : p) v += static_cast<float>(jitter(rng));
    points.push_back(p);
    truth.push_back(c);
  }
  const auto labels = AhcCluster(points, 3);
  // labels must be a relabeling of truth
  std::map<int, int> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto it = seen.find(truth[i]);
    if (it == seen.end()) {
      seen[truth[i]] = labels[i];
    } else {
      CHECK(it->second == labels[i]);
    }
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("ahc: duplicated point set partitions like the singleton set") {
  auto rng = testutil::MakeRng(112);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<float>> points;
    for (int i = 0; i < 8; ++i) {
      points.push_back({static_cast<float>(dist(rng)),
                        static_cast<float>(dist(rng)),
                        static_cast<float>(dist(rng))});
    }
    const auto base = AhcCluster(points, 3);
    std::vector<std::vector<float>> doubled;
    for (const auto &p : points) {
      doubled.push_back(p);
      doubled.push_back(p);
    }
    const auto dup = AhcCluster(doubled, 3);
    for (std::size_t i = 0; i < points.size(); ++i) {
      CHECK(dup[2 * i] == dup[2 * i + 1]);  // copies stay together
      CHECK(dup[2 * i] == base[i]);         // same partition as singletons
    }
  }
}

TEST_CASE("ahc diarize: labels follow first appearance and merge runs") {
  std::vector<SegmentEmbedding> embeddings;
  const auto add = [&](double onset, double offset, float x, float y) {
    SegmentEmbedding e;
    e.segment.onset = onset;
    e.segment.offset = offset;
    e.vector = {x, y};
    embeddings.push_back(e);
  };
  add(0.0, 1.5, 1.0f, 0.0f);
  add(0.75, 2.25, 1.0f, 0.05f);
  add(3.0, 4.5, 0.0f, 1.0f);
  add(6.0, 7.5, 1.0f, 0.02f);
  const auto segments = AhcDiarize(embeddings, 2, "rec");
  REQUIRE(segments.size() == 3);
  CHECK(segments[0].speaker == "spk1");
  CHECK(segments[0].onset == doctest::Approx(0.0));
  CHECK(segments[0].Offset() == doctest::Approx(2.25));
  CHECK(segments[1].speaker == "spk2");
  CHECK(segments[2].speaker == "spk1");
  for (const auto &seg : segments) CHECK(seg.recording_id == "rec");
}

TEST_CASE("ahc diarize: overlapping neighbors split at the midpoint") {
  std::vector<SegmentEmbedding> embeddings;
  SegmentEmbedding a, b;
  a.segment.onset = 0.0;
  a.segment.offset = 1.5;
  a.vector = {1.0f, 0.0f};
  b.segment.onset = 0.75;
  b.segment.offset = 2.25;
  b.vector = {0.0f, 1.0f};
  embeddings = {a, b};
  const auto segments = AhcDiarize(embeddings, 2, "rec");
  REQUIRE(segments.size() == 2);
  CHECK(segments[0].Offset() == doctest::Approx(1.125));
  CHECK(segments[1].onset == doctest::Approx(1.125));
}
