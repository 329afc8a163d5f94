// core/src/refine.cc

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

#include "syncscore/refine.h"

#include <algorithm>

#include "syncscore/error.h"

namespace syncscore {

namespace {
constexpr const char *kNoiseToken = "[noise]";
// Absorbs binary rounding of decimal times, so a gap written as exactly
// 0.300 s still merges.
constexpr double kTimeEps = 1e-9;
}  // namespace

RefineResult RefineWordsToUtterances(std::vector<CtmWord> words, double gap) {
  if (gap < 0.0) throw ArgumentError("refine: gap must be >= 0");
  std::sort(words.begin(), words.end(),
            [](const CtmWord &a, const CtmWord &b) {
              if (a.recording_id != b.recording_id)
                return a.recording_id < b.recording_id;
              if (a.speaker != b.speaker) return a.speaker < b.speaker;
              if (a.onset != b.onset) return a.onset < b.onset;
              if (a.duration != b.duration) return a.duration < b.duration;
              return a.word < b.word;
            });

  RefineResult result;
  UtteranceSegment cur;
  bool open = false;
  const auto flush = [&]() {
    if (open && cur.word_count > 0) result.segments.push_back(cur);
    open = false;
  };

  for (const CtmWord &w : words) {
    const bool same_group = open && w.recording_id == cur.recording_id &&
                            w.speaker == cur.speaker;
    if (!same_group) flush();

    if (w.word == kNoiseToken) {
      // [noise] separates utterances and never appears in one.
      if (same_group) flush();
      continue;
    }

    if (open && same_group) {
      const double silence = w.onset - cur.offset;
      if (silence > gap + kTimeEps) {
        flush();
      } else {
        if (silence < -kTimeEps) {
          result.warnings.push_back("overlapping words for speaker " +
                                    cur.speaker + " in " + cur.recording_id +
                                    " at " + std::to_string(w.onset) + "s");
        }
        cur.offset = std::max(cur.offset, w.End());
        ++cur.word_count;
        continue;
      }
    }
    cur = {w.recording_id, w.speaker, w.onset, w.End(), 1};
    open = true;
  }
  flush();

  std::sort(result.segments.begin(), result.segments.end(),
            [](const UtteranceSegment &a, const UtteranceSegment &b) {
              if (a.recording_id != b.recording_id)
                return a.recording_id < b.recording_id;
              if (a.onset != b.onset) return a.onset < b.onset;
              return a.speaker < b.speaker;
            });
  return result;
}

std::vector<RttmSegment> ToRttm(const std::vector<UtteranceSegment> &segments) {
  std::vector<RttmSegment> out;
  out.reserve(segments.size());
  for (const UtteranceSegment &seg : segments) {
    out.push_back(
        {seg.recording_id, seg.onset, seg.offset - seg.onset, seg.speaker});
  }
  return out;
}

}  // namespace syncscore
