// core/src/wer.cc

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

#include "syncscore/wer.h"

#include <algorithm>
#include <numeric>

#include "syncscore/error.h"

namespace syncscore {

EditCounts &EditCounts::operator+=(const EditCounts &other) {
  substitutions += other.substitutions;
  insertions += other.insertions;
  deletions += other.deletions;
  hits += other.hits;
  ref_len += other.ref_len;
  return *this;
}

namespace {

enum BackPointer : std::uint8_t { kNone, kDiag, kUp, kLeft };

}  // namespace

WerAlignment AlignWerFull(std::span<const std::string> ref,
                          std::span<const std::string> hyp) {
  const std::size_t n = ref.size(), m = hyp.size();
  const std::size_t stride = m + 1;
  std::vector<std::int32_t> cost((n + 1) * stride);
  std::vector<std::uint8_t> back((n + 1) * stride, kNone);
  for (std::size_t j = 1; j <= m; ++j) {
    cost[j] = static_cast<std::int32_t>(j);
    back[j] = kLeft;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    cost[i * stride] = static_cast<std::int32_t>(i);
    back[i * stride] = kUp;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::int32_t diag =
          cost[(i - 1) * stride + j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      const std::int32_t up = cost[(i - 1) * stride + j] + 1;
      const std::int32_t left = cost[i * stride + j - 1] + 1;
      // Preference on ties: diagonal (substitution beats an ins+del pair),
      // then deletion, so reference words are consumed as early as possible.
      std::int32_t best = diag;
      std::uint8_t bp = kDiag;
      if (up < best) {
        best = up;
        bp = kUp;
      }
      if (left < best) {
        best = left;
        bp = kLeft;
      }
      cost[i * stride + j] = best;
      back[i * stride + j] = bp;
    }
  }

  WerAlignment result;
  result.counts.ref_len = static_cast<std::int64_t>(n);
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    switch (back[i * stride + j]) {
      case kDiag:
        if (ref[i - 1] == hyp[j - 1]) {
          ++result.counts.hits;
          result.ops.push_back(EditOp::kHit);
        } else {
          ++result.counts.substitutions;
          result.ops.push_back(EditOp::kSubstitution);
        }
        --i;
        --j;
        break;
      case kUp:
        ++result.counts.deletions;
        result.ops.push_back(EditOp::kDeletion);
        --i;
        break;
      case kLeft:
        ++result.counts.insertions;
        result.ops.push_back(EditOp::kInsertion);
        --j;
        break;
      case kNone:
        throw Error("AlignWerFull: corrupt traceback");
    }
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

EditCounts AlignWer(std::span<const std::string> ref,
                    std::span<const std::string> hyp) {
  return AlignWerFull(ref, hyp).counts;
}

std::vector<EditCounts> SplitCountsByUtterance(
    const WerAlignment &alignment,
    std::span<const std::int64_t> utterance_lens) {
  const std::int64_t total =
      std::accumulate(utterance_lens.begin(), utterance_lens.end(),
                      std::int64_t{0});
  if (total != alignment.counts.ref_len)
    throw ArgumentError(
        "SplitCountsByUtterance: utterance lengths do not sum to ref_len");
  if (utterance_lens.empty())
    throw ArgumentError("SplitCountsByUtterance: no utterances");

  const std::size_t num_utts = utterance_lens.size();
  std::vector<std::int64_t> cum(num_utts + 1, 0);
  for (std::size_t u = 0; u < num_utts; ++u)
    cum[u + 1] = cum[u] + utterance_lens[u];

  std::vector<EditCounts> per_utt(num_utts);
  for (std::size_t u = 0; u < num_utts; ++u)
    per_utt[u].ref_len = utterance_lens[u];

  // First utterance whose span [cum[u], cum[u+1]) contains ref position r;
  // for r == ref_len (trailing insertions) the last utterance.
  const auto utt_at = [&](std::int64_t r) -> std::size_t {
    const auto it = std::upper_bound(cum.begin() + 1, cum.end(), r);
    std::size_t u = static_cast<std::size_t>(it - cum.begin() - 1);
    return std::min(u, num_utts - 1);
  };

  std::int64_t r = 0;
  for (const EditOp op : alignment.ops) {
    switch (op) {
      case EditOp::kHit:
        ++per_utt[utt_at(r)].hits;
        ++r;
        break;
      case EditOp::kSubstitution:
        ++per_utt[utt_at(r)].substitutions;
        ++r;
        break;
      case EditOp::kDeletion:
        ++per_utt[utt_at(r)].deletions;
        ++r;
        break;
      case EditOp::kInsertion:
        ++per_utt[utt_at(r)].insertions;
        break;
    }
  }
  return per_utt;
}

}  // namespace syncscore
