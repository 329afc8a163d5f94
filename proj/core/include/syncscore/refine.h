// core/include/syncscore/refine.h

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

#ifndef SYNCSCORE_REFINE_H_
#define SYNCSCORE_REFINE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "syncscore/ctm.h"
#include "syncscore/rttm.h"

namespace syncscore {

/// A refined utterance built from word-level alignments.
struct UtteranceSegment {
  std::string recording_id;
  std::string speaker;
  double onset = 0.0;
  double offset = 0.0;
  std::int64_t word_count = 0;
  bool operator==(const UtteranceSegment &) const = default;
};

struct RefineResult {
  std::vector<UtteranceSegment> segments;
  std::vector<std::string> warnings;
};

/// Merges word alignments into utterances per (recording, speaker):
/// consecutive words join when the silence between them (word end to next
/// word onset) is at most `gap` seconds and no [noise] token intervenes.
/// [noise] tokens always split and are excluded from the output. Words are
/// sorted internally, so input order does not matter. Overlapping words of
/// one speaker are merged and reported in `warnings`.
RefineResult RefineWordsToUtterances(std::vector<CtmWord> words,
                                     double gap = 0.3);

std::vector<RttmSegment> ToRttm(const std::vector<UtteranceSegment> &segments);

}  // namespace syncscore

#endif  // SYNCSCORE_REFINE_H_
