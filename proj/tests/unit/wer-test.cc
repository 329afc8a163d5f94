// tests/unit/wer-test.cc

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

#include <functional>
#include <map>
#include <random>

#include <doctest.h>

#include "syncscore/wer.h"
#include "test-util.h"

using namespace syncscore;

namespace {

// Independent oracle: plain recursive edit distance with memoization
// (cost only, no traceback machinery shared with the implementation).
int OracleEditDistance(const std::vector<std::string> &ref,
                       const std::vector<std::string> &hyp) {
  std::map<std::pair<int, int>, int> memo;
  const std::function<int(int, int)> go = [&](int i, int j) -> int {
    if (i == 0) return j;
    if (j == 0) return i;
    const auto key = std::make_pair(i, j);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int best = go(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
    best = std::min(best, go(i - 1, j) + 1);
    best = std::min(best, go(i, j - 1) + 1);
    memo[key] = best;
    return best;
  };
  return go(static_cast<int>(ref.size()), static_cast<int>(hyp.size()));
}

std::vector<std::string> Words(std::initializer_list<const char *> list) {
  return std::vector<std::string>(list.begin(), list.end());
}

}  // namespace

TEST_CASE("wer: identity has zero errors") {
  const auto counts = AlignWer(Words({"the", "cat", "sat"}),
                               Words({"the", "cat", "sat"}));
  CHECK(counts.NumErrors() == 0);
  CHECK(counts.hits == 3);
  CHECK(counts.ref_len == 3);
}

TEST_CASE("wer: single deletion") {
  const auto counts =
      AlignWer(Words({"the", "cat", "sat"}), Words({"the", "cat"}));
  CHECK(counts.deletions == 1);
  CHECK(counts.insertions == 0);
  CHECK(counts.substitutions == 0);
  CHECK(counts.Wer() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("wer: substitution plus insertion") {
  const auto counts =
      AlignWer(Words({"a", "b", "c"}), Words({"a", "x", "c", "d"}));
  CHECK(counts.substitutions == 1);
  CHECK(counts.insertions == 1);
  CHECK(counts.deletions == 0);
  CHECK(counts.Wer() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("wer: empty reference against non-empty hypothesis") {
  const auto counts = AlignWer({}, Words({"a", "b"}));
  CHECK(counts.insertions == 2);
  CHECK(counts.ref_len == 0);
  CHECK(counts.Undefined());
}

TEST_CASE("wer: equals the recursive oracle on random pairs") {
  auto rng = testutil::MakeRng(51);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto ref = testutil::RandomTokens(rng, 12, 4);
    const auto hyp = testutil::RandomTokens(rng, 12, 4);
    const EditCounts counts = AlignWer(ref, hyp);
    CHECK(counts.NumErrors() == OracleEditDistance(ref, hyp));
    // counting identity: every reference word is hit, substituted or deleted
    CHECK(counts.hits + counts.substitutions + counts.deletions ==
          counts.ref_len);
    CHECK(counts.ref_len == static_cast<std::int64_t>(ref.size()));
    CHECK(counts.hits + counts.substitutions + counts.insertions ==
          static_cast<std::int64_t>(hyp.size()));
  }
}

TEST_CASE("wer: tie-break prefers substitutions over ins+del pairs") {
  // "a b" vs "b a" costs 2 either way; the substitution path is chosen.
  const auto counts = AlignWer(Words({"a", "b"}), Words({"b", "a"}));
  CHECK(counts.NumErrors() == 2);
  CHECK(counts.substitutions == 2);
}

TEST_CASE("wer: traceback ops replay to the counts") {
  auto rng = testutil::MakeRng(52);
  for (int trial = 0; trial < 500; ++trial) {
    const auto ref = testutil::RandomTokens(rng, 10, 3);
    const auto hyp = testutil::RandomTokens(rng, 10, 3);
    const WerAlignment alignment = AlignWerFull(ref, hyp);
    EditCounts replay;
    replay.ref_len = alignment.counts.ref_len;
    for (const EditOp op : alignment.ops) {
      switch (op) {
        case EditOp::kHit: ++replay.hits; break;
        case EditOp::kSubstitution: ++replay.substitutions; break;
        case EditOp::kInsertion: ++replay.insertions; break;
        case EditOp::kDeletion: ++replay.deletions; break;
      }
    }
    CHECK(replay == alignment.counts);
  }
}

TEST_CASE("wer: per-utterance split sums to the global counts") {
  const auto ref = Words({"a", "b", "c", "d", "e", "f"});
  const auto hyp = Words({"a", "x", "c", "d", "f"});
  const WerAlignment alignment = AlignWerFull(ref, hyp);
  const std::vector<std::int64_t> lens = {2, 2, 2};
  const auto split = SplitCountsByUtterance(alignment, lens);
  REQUIRE(split.size() == 3);
  EditCounts sum;
  for (const auto &c : split) sum += c;
  CHECK(sum == alignment.counts);
  CHECK(split[0].substitutions == 1);  // b -> x
  CHECK(split[2].deletions == 1);      // e dropped
}

TEST_CASE("wer: all-correct split gives zero errors per utterance") {
  const auto ref = Words({"a", "b", "c"});
  const auto split = SplitCountsByUtterance(AlignWerFull(ref, ref),
                                            std::vector<std::int64_t>{1, 1, 1});
  for (const auto &c : split) CHECK(c.NumErrors() == 0);
}

TEST_CASE("wer: single substitution lands in the right utterance") {
  const auto ref = Words({"a", "b", "c"});
  const auto hyp = Words({"a", "x", "c"});
  const auto split = SplitCountsByUtterance(AlignWerFull(ref, hyp),
                                            std::vector<std::int64_t>{1, 1, 1});
  CHECK(split[0].NumErrors() == 0);
  CHECK(split[1].substitutions == 1);
  CHECK(split[2].NumErrors() == 0);
}

TEST_CASE("wer: boundary insertion attributed to the following utterance") {
  // Insertion lands exactly between utterance 1 and 2.
  const auto ref = Words({"a", "b"});
  const auto hyp = Words({"a", "z", "b"});
  const auto split = SplitCountsByUtterance(AlignWerFull(ref, hyp),
                                            std::vector<std::int64_t>{1, 1});
  CHECK(split[0].insertions == 0);
  CHECK(split[1].insertions == 1);
}

TEST_CASE("wer: trailing insertions go to the last utterance") {
  const auto ref = Words({"a", "b"});
  const auto hyp = Words({"a", "b", "z", "z"});
  const auto split = SplitCountsByUtterance(AlignWerFull(ref, hyp),
                                            std::vector<std::int64_t>{1, 1});
  CHECK(split[1].insertions == 2);
}

TEST_CASE("wer: per-utterance sums equal global on random inputs") {
  auto rng = testutil::MakeRng(53);
  std::uniform_int_distribution<int> lens_dist(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ref = testutil::RandomTokens(rng, 14, 3);
    const auto hyp = testutil::RandomTokens(rng, 14, 3);
    // random utterance partition of ref
    std::vector<std::int64_t> lens;
    std::int64_t left = static_cast<std::int64_t>(ref.size());
    while (left > 0) {
      const std::int64_t l = std::min<std::int64_t>(left, lens_dist(rng));
      lens.push_back(l);
      left -= l;
    }
    if (lens.empty()) lens.push_back(0);
    const WerAlignment alignment = AlignWerFull(ref, hyp);
    const auto split = SplitCountsByUtterance(alignment, lens);
    EditCounts sum;
    for (const auto &c : split) sum += c;
    CHECK(sum == alignment.counts);
  }
}
