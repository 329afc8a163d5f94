// tests/unit/diar-score-test.cc

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
#include <map>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "syncscore/diar-score.h"
#include "test-util.h"

using namespace syncscore;

namespace {

std::vector<RttmSegment> RandomRttm(std::mt19937_64 &rng, int num_speakers,
                                    int num_segments, double span) {
  std::uniform_real_distribution<double> onset(0.0, span);
  std::uniform_real_distribution<double> dur(0.2, span / 4);
  std::uniform_int_distribution<int> spk(1, num_speakers);
  std::vector<RttmSegment> segments;
  for (int i = 0; i < num_segments; ++i) {
    segments.push_back({"rec", onset(rng), dur(rng),
                        "P" + std::to_string(spk(rng))});
  }
  return segments;
}

// 1 ms-grid sampling approximation of the DER components, reusing the
// mapping chosen by the scorer.
DiarScore GridDer(const std::vector<RttmSegment> &ref,
                  const std::vector<RttmSegment> &hyp,
                  const std::map<std::string, std::string> &mapping) {
  double span = 0.0;
  for (const auto &seg : ref) span = std::max(span, seg.Offset());
  for (const auto &seg : hyp) span = std::max(span, seg.Offset());
  const double grid = 0.001;
  DiarScore out;
  for (double t = grid / 2; t < span; t += grid) {
    std::set<std::string> ref_active, hyp_active;
    for (const auto &seg : ref) {
      if (seg.onset <= t && t < seg.Offset()) ref_active.insert(seg.speaker);
    }
    for (const auto &seg : hyp) {
      if (seg.onset <= t && t < seg.Offset()) hyp_active.insert(seg.speaker);
    }
    int correct = 0;
    for (const auto &speaker : ref_active) {
      const auto it = mapping.find(speaker);
      if (it != mapping.end() && hyp_active.count(it->second)) ++correct;
    }
    const int nr = static_cast<int>(ref_active.size());
    const int nh = static_cast<int>(hyp_active.size());
    out.total_ref_speech += grid * nr;
    out.missed += grid * std::max(0, nr - nh);
    out.false_alarm += grid * std::max(0, nh - nr);
    out.confusion += grid * (std::min(nr, nh) - correct);
  }
  out.der = out.total_ref_speech > 0
                ? (out.missed + out.false_alarm + out.confusion) /
                      out.total_ref_speech
                : 0.0;
  return out;
}

}  // namespace

TEST_CASE("der: identical hypothesis scores zero") {
  const std::vector<RttmSegment> ref = {{"rec", 0.0, 10.0, "A"},
                                        {"rec", 10.0, 10.0, "B"}};
  const DiarScore score = ScoreDiarization(ref, ref);
  CHECK(score.der == 0.0);
  CHECK(score.missed == 0.0);
  CHECK(score.false_alarm == 0.0);
  CHECK(score.confusion == 0.0);
  CHECK(score.total_ref_speech == doctest::Approx(20.0));
}

TEST_CASE("der: the 10% confusion fixture") {
  // ref A[0,10) B[10,20); hyp A[0,8) B[8,20): [8,10) is attributed to the
  // wrong speaker -> confusion 2 s, DER 2/20.
  const std::vector<RttmSegment> ref = {{"rec", 0.0, 10.0, "A"},
                                        {"rec", 10.0, 10.0, "B"}};
  const std::vector<RttmSegment> hyp = {{"rec", 0.0, 8.0, "A"},
                                        {"rec", 8.0, 12.0, "B"}};
  const DiarScore score = ScoreDiarization(ref, hyp);
  CHECK(score.confusion == doctest::Approx(2.0));
  CHECK(score.missed == doctest::Approx(0.0));
  CHECK(score.false_alarm == doctest::Approx(0.0));
  CHECK(score.der == doctest::Approx(0.10));
}

TEST_CASE("der: empty hypothesis is all miss") {
  const std::vector<RttmSegment> ref = {{"rec", 0.0, 10.0, "A"},
                                        {"rec", 10.0, 10.0, "B"}};
  const DiarScore score = ScoreDiarization(ref, {});
  CHECK(score.missed == doctest::Approx(20.0));
  CHECK(score.der == doctest::Approx(1.0));
}

TEST_CASE("der: overlap regions score every reference speaker") {
  // Two refs speak simultaneously; a single hyp speaker covers one of them.
  const std::vector<RttmSegment> ref = {{"rec", 0.0, 10.0, "A"},
                                        {"rec", 0.0, 10.0, "B"}};
  const std::vector<RttmSegment> hyp = {{"rec", 0.0, 10.0, "X"}};
  const DiarScore score = ScoreDiarization(ref, hyp);
  CHECK(score.total_ref_speech == doctest::Approx(20.0));
  CHECK(score.missed == doctest::Approx(10.0));
  CHECK(score.confusion == doctest::Approx(0.0));
  CHECK(score.der == doctest::Approx(0.5));
}

TEST_CASE("der: collar excludes reference boundaries from scoring") {
  // hyp boundary is off by 0.2 s; a 0.25 s collar absorbs the error.
  const std::vector<RttmSegment> ref = {{"rec", 0.0, 10.0, "A"},
                                        {"rec", 10.0, 10.0, "B"}};
  const std::vector<RttmSegment> hyp = {{"rec", 0.0, 10.2, "A"},
                                        {"rec", 10.2, 9.8, "B"}};
  const DiarScore strict = ScoreDiarization(ref, hyp);
  CHECK(strict.confusion == doctest::Approx(0.2));
  DiarOptions opts;
  opts.collar = 0.25;
  const DiarScore collared = ScoreDiarization(ref, hyp, opts);
  CHECK(collared.confusion == doctest::Approx(0.0));
  CHECK(collared.der == doctest::Approx(0.0));
  // Zones: [0,0.25] at the session edge, [9.75,10.25] shared by A's offset
  // and B's onset, [19.75,20] clipped at the end -> 1 s removed.
  CHECK(collared.scored_time == doctest::Approx(19.0));
}

TEST_CASE("der: score_overlap=false drops overlapped reference regions") {
  const std::vector<RttmSegment> ref = {{"rec", 0.0, 10.0, "A"},
                                        {"rec", 5.0, 10.0, "B"}};
  const std::vector<RttmSegment> hyp = {{"rec", 0.0, 15.0, "X"}};
  DiarOptions opts;
  opts.score_overlap = false;
  const DiarScore score = ScoreDiarization(ref, hyp, opts);
  // [5,10) is excluded; 10 s of single-speaker speech remains, of which
  // the speaker not mapped to X is pure confusion.
  CHECK(score.total_ref_speech == doctest::Approx(10.0));
  CHECK(score.missed == doctest::Approx(0.0));
  CHECK(score.confusion == doctest::Approx(5.0));
  CHECK(score.der == doctest::Approx(0.5));
  // with overlaps scored, speech time counts per speaker (20 s total)
  // and the overlapped region adds a miss
  const DiarScore full = ScoreDiarization(ref, hyp);
  CHECK(full.total_ref_speech == doctest::Approx(20.0));
  CHECK(full.missed == doctest::Approx(5.0));
  CHECK(full.confusion == doctest::Approx(5.0));
  CHECK(full.der == doctest::Approx(0.5));
}

TEST_CASE("der: invariant under hypothesis relabeling") {
  auto rng = testutil::MakeRng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ref = RandomRttm(rng, 3, 8, 60.0);
    auto hyp = RandomRttm(rng, 3, 8, 60.0);
    const double base = ScoreDiarization(ref, hyp).der;
    for (auto &seg : hyp) seg.speaker = "relabeled-" + seg.speaker;
    CHECK(ScoreDiarization(ref, hyp).der == doctest::Approx(base));
  }
}

TEST_CASE("der: components are nonnegative and DER consistent") {
  auto rng = testutil::MakeRng(82);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ref = RandomRttm(rng, 4, 10, 40.0);
    const auto hyp = RandomRttm(rng, 4, 10, 40.0);
    const DiarScore s = ScoreDiarization(ref, hyp);
    CHECK(s.missed >= 0.0);
    CHECK(s.false_alarm >= 0.0);
    CHECK(s.confusion >= -1e-12);
    CHECK(s.der ==
          doctest::Approx((s.missed + s.false_alarm + s.confusion) /
                          s.total_ref_speech));
  }
}

TEST_CASE("der: region partition matches 1 ms grid sampling") {
  auto rng = testutil::MakeRng(83);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ref = RandomRttm(rng, 3, 8, 30.0);
    const auto hyp = RandomRttm(rng, 3, 8, 30.0);
    const DiarScore exact = ScoreDiarization(ref, hyp);
    const DiarScore grid = GridDer(ref, hyp, exact.mapping);
    CHECK(std::abs(exact.der - grid.der) < 0.002);
  }
}

TEST_CASE("jer: identical hypothesis scores zero") {
  const std::vector<RttmSegment> ref = {{"rec", 0.0, 10.0, "A"},
                                        {"rec", 10.0, 10.0, "B"}};
  CHECK(Jer(ref, ref) == doctest::Approx(0.0));
}

TEST_CASE("jer: the 18.33% fixture") {
  // JER_A = 1 - 8/10, JER_B = 1 - 10/12, mean = 11/60.
  const std::vector<RttmSegment> ref = {{"rec", 0.0, 10.0, "A"},
                                        {"rec", 10.0, 10.0, "B"}};
  const std::vector<RttmSegment> hyp = {{"rec", 0.0, 8.0, "A"},
                                        {"rec", 8.0, 12.0, "B"}};
  const DiarScore score = ScoreDiarization(ref, hyp);
  CHECK(score.jer_per_speaker.at("A") == doctest::Approx(0.2));
  CHECK(score.jer_per_speaker.at("B") == doctest::Approx(1.0 / 6.0));
  CHECK(score.jer == doctest::Approx(11.0 / 60.0));
  CHECK(100.0 * score.jer == doctest::Approx(18.33).epsilon(1e-3));
}

TEST_CASE("jer: empty hypothesis scores one") {
  const std::vector<RttmSegment> ref = {{"rec", 0.0, 10.0, "A"}};
  CHECK(Jer(ref, {}) == doctest::Approx(1.0));
}

TEST_CASE("jer: per-speaker terms stay in [0, 1]") {
  auto rng = testutil::MakeRng(84);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ref = RandomRttm(rng, 4, 8, 30.0);
    const auto hyp = RandomRttm(rng, 4, 8, 30.0);
    const DiarScore score = ScoreDiarization(ref, hyp);
    for (const auto &[speaker, jer] : score.jer_per_speaker) {
      CHECK(jer >= 0.0);
      CHECK(jer <= 1.0);
    }
  }
}

TEST_CASE("jer: zero only when mapped intervals are identical") {
  const std::vector<RttmSegment> ref = {{"rec", 0.0, 5.0, "A"},
                                        {"rec", 6.0, 4.0, "B"}};
  const std::vector<RttmSegment> hyp = {{"rec", 0.0, 5.0, "X"},
                                        {"rec", 6.0, 4.1, "Y"}};
  const DiarScore score = ScoreDiarization(ref, hyp);
  CHECK(score.jer_per_speaker.at("A") == doctest::Approx(0.0));
  CHECK(score.jer_per_speaker.at("B") > 0.0);
}

TEST_CASE("sad: identical speech scores zero") {
  const IntervalSet speech = {{0.0, 50.0}};
  const SadScore score = ScoreSad(speech, speech, 100.0);
  CHECK(score.missed_pct == 0.0);
  CHECK(score.false_alarm_pct == 0.0);
  CHECK(score.total_error_pct == 0.0);
}

TEST_CASE("sad: shifted detector gives 10/10/20") {
  const SadScore score = ScoreSad({{0.0, 50.0}}, {{10.0, 60.0}}, 100.0);
  CHECK(score.missed_pct == doctest::Approx(10.0));
  CHECK(score.false_alarm_pct == doctest::Approx(10.0));
  CHECK(score.total_error_pct == doctest::Approx(20.0));
}

TEST_CASE("sad: saturating detector") {
  const SadScore score = ScoreSad({{0.0, 50.0}}, {{0.0, 100.0}}, 100.0);
  CHECK(score.missed_pct == doctest::Approx(0.0));
  CHECK(score.false_alarm_pct == doctest::Approx(50.0));
}

TEST_CASE("sad: total equals miss plus FA exactly") {
  auto rng = testutil::MakeRng(85);
  std::uniform_real_distribution<double> t(0.0, 100.0);
  for (int trial = 0; trial < 200; ++trial) {
    IntervalSet ref, hyp;
    for (int i = 0; i < 6; ++i) {
      double a = t(rng), b = t(rng);
      ref.push_back({std::min(a, b), std::max(a, b)});
      a = t(rng);
      b = t(rng);
      hyp.push_back({std::min(a, b), std::max(a, b)});
    }
    const SadScore score =
        ScoreSad(Normalize(std::move(ref)), Normalize(std::move(hyp)), 100.0);
    CHECK(score.total_error_pct ==
          score.missed_pct + score.false_alarm_pct);  // exact, by construction
  }
}

TEST_CASE("sad: speech normalization option") {
  const SadScore score = ScoreSad({{0.0, 50.0}}, {{10.0, 60.0}}, 100.0,
                                  SadNormalization::kRefSpeech);
  CHECK(score.missed_pct == doctest::Approx(20.0));  // 10 s of 50 s speech
  CHECK(score.false_alarm_pct == doctest::Approx(20.0));
}

TEST_CASE("sad: non-positive total time is an argument error") {
  CHECK_THROWS(ScoreSad({{0.0, 1.0}}, {{0.0, 1.0}}, 0.0));
  CHECK_THROWS(ScoreSad({{0.0, 1.0}}, {{0.0, 1.0}}, -5.0));
}

TEST_CASE("diar report: multiple recordings pool components") {
  std::vector<RttmSegment> ref = {{"rec1", 0.0, 10.0, "A"},
                                  {"rec2", 0.0, 10.0, "A"}};
  std::vector<RttmSegment> hyp = {{"rec1", 0.0, 10.0, "X"}};
  const DiarReport report = ScoreDiarizationByRecording(ref, hyp);
  CHECK(report.per_recording.size() == 2);
  CHECK(report.per_recording.at("rec1").der == doctest::Approx(0.0));
  CHECK(report.per_recording.at("rec2").der == doctest::Approx(1.0));
  CHECK(report.overall.der == doctest::Approx(0.5));
  CHECK(report.overall.jer == doctest::Approx(0.5));
}
