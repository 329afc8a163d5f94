// tests/unit/cpwer-test.cc

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
#include <limits>
#include <random>
#include <sstream>

#include <doctest.h>

#include "syncscore/cpwer.h"
#include "syncscore/wer.h"
#include "test-util.h"

using namespace syncscore;

namespace {

SpeakerStreams Streams(
    std::initializer_list<std::pair<std::string, std::string>> utterances) {
  // Each pair is (speaker, space-separated words); start times follow the
  // listing order.
  SpeakerStreams streams;
  double t = 0.0;
  for (const auto &[speaker, words] : utterances) {
    TimedTokens tokens;
    tokens.start_time = t;
    t += 1.0;
    std::istringstream iss(words);
    std::string w;
    while (iss >> w) tokens.tokens.push_back(w);
    streams[speaker].push_back(std::move(tokens));
  }
  return streams;
}

// Exhaustive oracle over all hyp->ref matchings (padded to square with
// empty streams), using a plain DP distance.
std::int64_t OracleCpWerErrors(const SpeakerStreams &ref,
                               const SpeakerStreams &hyp) {
  const auto concat = [](const SpeakerStreams &streams) {
    std::vector<std::vector<std::string>> out;
    for (const auto &[speaker, utts] : streams) {
      std::vector<const TimedTokens *> order;
      for (const auto &u : utts) order.push_back(&u);
      std::stable_sort(order.begin(), order.end(),
                       [](const TimedTokens *a, const TimedTokens *b) {
                         return a->start_time < b->start_time;
                       });
      std::vector<std::string> tokens;
      for (const auto *u : order)
        tokens.insert(tokens.end(), u->tokens.begin(), u->tokens.end());
      out.push_back(std::move(tokens));
    }
    return out;
  };
  auto ref_streams = concat(ref);
  auto hyp_streams = concat(hyp);
  const std::size_t k = std::max(ref_streams.size(), hyp_streams.size());
  ref_streams.resize(k);
  hyp_streams.resize(k);
  std::vector<int> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < k; ++i)
      total += AlignWer(ref_streams[i], hyp_streams[perm[i]]).NumErrors();
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("cpwer: permuted speaker labels score zero") {
  const SpeakerStreams ref = Streams({{"P1", "hello world"},
                                      {"P2", "good night"},
                                      {"P3", "see you"},
                                      {"P4", "bye now"}});
  SpeakerStreams hyp;
  hyp["A"] = ref.at("P3");
  hyp["B"] = ref.at("P1");
  hyp["C"] = ref.at("P4");
  hyp["D"] = ref.at("P2");
  const CpWerResult result = ComputeCpWer(ref, hyp);
  CHECK(result.cpwer == 0.0);
  CHECK(result.counts.NumErrors() == 0);
  CHECK(result.mapping.at("A") == "P3");
  CHECK(result.mapping.at("B") == "P1");
  CHECK(result.mapping.at("C") == "P4");
  CHECK(result.mapping.at("D") == "P2");
}

TEST_CASE("cpwer: two-speaker example with one substitution") {
  const SpeakerStreams ref =
      Streams({{"P1", "hello world"}, {"P2", "good night"}});
  const SpeakerStreams hyp =
      Streams({{"A", "good night"}, {"B", "hello word"}});
  const CpWerResult result = ComputeCpWer(ref, hyp);
  CHECK(result.mapping.at("A") == "P2");
  CHECK(result.mapping.at("B") == "P1");
  CHECK(result.counts.substitutions == 1);
  CHECK(result.cpwer == doctest::Approx(0.25));
  CHECK(OracleCpWerErrors(ref, hyp) == 1);
}

TEST_CASE("cpwer: missing hypothesis speaker becomes deletions") {
  const SpeakerStreams ref = Streams({{"P1", "a b c"},
                                      {"P2", "d e"},
                                      {"P3", "f g h i"},
                                      {"P4", "j"}});
  SpeakerStreams hyp;
  hyp["X"] = ref.at("P1");
  hyp["Y"] = ref.at("P2");
  hyp["Z"] = ref.at("P4");
  const CpWerResult result = ComputeCpWer(ref, hyp);
  CHECK(result.counts.deletions == 4);  // P3's full stream
  CHECK(result.counts.NumErrors() == 4);
  CHECK(result.counts.NumErrors() == OracleCpWerErrors(ref, hyp));
  bool found_unmatched = false;
  for (const SpeakerPairCounts &pair : result.per_speaker) {
    if (pair.ref_speaker == "P3") {
      CHECK(pair.hyp_speaker.empty());
      CHECK(pair.counts.deletions == 4);
      found_unmatched = true;
    }
  }
  CHECK(found_unmatched);
}

TEST_CASE("cpwer: extra hypothesis speaker becomes insertions") {
  const SpeakerStreams ref = Streams({{"P1", "a b"}});
  const SpeakerStreams hyp = Streams({{"X", "a b"}, {"Y", "q q q"}});
  const CpWerResult result = ComputeCpWer(ref, hyp);
  CHECK(result.counts.insertions == 3);
  CHECK(result.counts.NumErrors() == OracleCpWerErrors(ref, hyp));
}

TEST_CASE("cpwer: empty reference raises the undefined flag") {
  const CpWerResult result =
      ComputeCpWer({}, Streams({{"X", "a"}}));
  CHECK(result.undefined_rate);
  CHECK(std::isnan(result.cpwer));
  const CpWerResult empty = ComputeCpWer({}, {});
  CHECK(empty.undefined_rate);
}

TEST_CASE("cpwer: chronological concatenation uses start times") {
  SpeakerStreams ref;
  ref["P1"].push_back({5.0, {"world"}});
  ref["P1"].push_back({1.0, {"hello"}});
  SpeakerStreams hyp;
  hyp["A"].push_back({0.0, {"hello", "world"}});
  const CpWerResult result = ComputeCpWer(ref, hyp);
  CHECK(result.counts.NumErrors() == 0);
}

TEST_CASE("cpwer: equals the exhaustive oracle on random instances") {
  auto rng = testutil::MakeRng(71);
  std::uniform_int_distribution<int> num_spk(1, 4);
  std::uniform_int_distribution<int> num_utts(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    SpeakerStreams ref, hyp;
    const int nr = num_spk(rng), nh = num_spk(rng);
    for (int s = 0; s < nr; ++s) {
      const std::string name = "R" + std::to_string(s);
      for (int u = 0, n = num_utts(rng); u < n; ++u)
        ref[name].push_back({static_cast<double>(u),
                             testutil::RandomTokens(rng, 5, 3)});
    }
    for (int s = 0; s < nh; ++s) {
      const std::string name = "H" + std::to_string(s);
      for (int u = 0, n = num_utts(rng); u < n; ++u)
        hyp[name].push_back({static_cast<double>(u),
                             testutil::RandomTokens(rng, 5, 3)});
    }
    const CpWerResult result = ComputeCpWer(ref, hyp);
    CHECK(result.counts.NumErrors() == OracleCpWerErrors(ref, hyp));
  }
}

TEST_CASE("cpwer: invariant under hypothesis label permutation") {
  auto rng = testutil::MakeRng(72);
  for (int trial = 0; trial < 100; ++trial) {
    SpeakerStreams ref, hyp;
    for (int s = 0; s < 3; ++s) {
      ref["R" + std::to_string(s)].push_back(
          {0.0, testutil::RandomTokens(rng, 6, 3)});
      hyp["H" + std::to_string(s)].push_back(
          {0.0, testutil::RandomTokens(rng, 6, 3)});
    }
    const auto base = ComputeCpWer(ref, hyp);
    SpeakerStreams relabeled;
    relabeled["Z9"] = hyp["H1"];
    relabeled["Z1"] = hyp["H2"];
    relabeled["Z5"] = hyp["H0"];
    const auto permuted = ComputeCpWer(ref, relabeled);
    CHECK(base.counts.NumErrors() == permuted.counts.NumErrors());
    CHECK(base.counts.ref_len == permuted.counts.ref_len);
  }
}

TEST_CASE("cpwer: value invariant under reference label permutation") {
  auto rng = testutil::MakeRng(75);
  for (int trial = 0; trial < 100; ++trial) {
    SpeakerStreams ref, hyp;
    for (int s = 0; s < 3; ++s) {
      ref["R" + std::to_string(s)].push_back(
          {0.0, testutil::RandomTokens(rng, 6, 3)});
      hyp["H" + std::to_string(s)].push_back(
          {0.0, testutil::RandomTokens(rng, 6, 3)});
    }
    const auto base = ComputeCpWer(ref, hyp);
    SpeakerStreams relabeled;
    relabeled["A9"] = ref["R2"];
    relabeled["A5"] = ref["R0"];
    relabeled["A7"] = ref["R1"];
    const auto permuted = ComputeCpWer(relabeled, hyp);
    CHECK(base.counts.NumErrors() == permuted.counts.NumErrors());
    CHECK(base.counts.ref_len == permuted.counts.ref_len);
  }
}

TEST_CASE("cpwer: self-score is zero for four speakers, many utterances") {
  auto rng = testutil::MakeRng(73);
  SpeakerStreams ref;
  for (int s = 0; s < 4; ++s) {
    for (int u = 0; u < 25; ++u) {
      ref["P" + std::to_string(s)].push_back(
          {static_cast<double>(u), testutil::RandomTokens(rng, 8, 5)});
    }
  }
  const CpWerResult result = ComputeCpWer(ref, ref);
  CHECK(result.counts.NumErrors() == 0);
  CHECK(result.cpwer == 0.0);
}

TEST_CASE("cpwer: correcting a wrong word never increases the rate") {
  auto rng = testutil::MakeRng(74);
  for (int trial = 0; trial < 100; ++trial) {
    SpeakerStreams ref, hyp;
    for (int s = 0; s < 3; ++s) {
      const auto tokens = testutil::RandomTokens(rng, 6, 3);
      ref["P" + std::to_string(s)].push_back({0.0, tokens});
      hyp["H" + std::to_string(s)].push_back({0.0, tokens});
    }
    // corrupt one word of one hypothesis speaker
    auto &tokens = hyp["H1"][0].tokens;
    if (tokens.empty()) continue;
    const std::string orig = tokens[0];
    tokens[0] = "zzz";
    const double corrupted = ComputeCpWer(ref, hyp).counts.NumErrors();
    tokens[0] = orig;
    const double fixed = ComputeCpWer(ref, hyp).counts.NumErrors();
    CHECK(fixed <= corrupted);
  }
}

TEST_CASE("cpwer: per-utterance report sums to the global counts") {
  const SpeakerStreams ref = Streams({{"P1", "a b"},
                                      {"P1", "c d e"},
                                      {"P2", "f g"}});
  const SpeakerStreams hyp = Streams({{"X", "a b"},
                                      {"X", "c q e"},
                                      {"Y", "f g h"}});
  PerUtteranceReport report;
  const CpWerResult result = ComputeCpWer(ref, hyp, &report);
  EditCounts sum;
  for (const UtteranceErrors &u : report.utterances) sum += u.counts;
  CHECK(sum == result.counts);
  // one substitution in P1's second utterance
  bool checked = false;
  for (const UtteranceErrors &u : report.utterances) {
    if (u.ref_speaker == "P1" && u.utterance_index == 1) {
      CHECK(u.counts.substitutions == 1);
      checked = true;
    }
  }
  CHECK(checked);
}
