// core/include/syncscore/cpwer.h

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

#ifndef SYNCSCORE_CPWER_H_
#define SYNCSCORE_CPWER_H_

#include <map>
#include <string>
#include <vector>

#include "syncscore/textnorm.h"
#include "syncscore/transcript.h"
#include "syncscore/wer.h"

namespace syncscore {

/// One utterance of a per-speaker stream: normalized tokens plus the start
/// time used for chronological concatenation.
struct TimedTokens {
  double start_time = 0.0;
  std::vector<std::string> tokens;
};

/// Speaker label -> that speaker's utterances.
using SpeakerStreams = std::map<std::string, std::vector<TimedTokens>>;

/// Edit counts of one (reference speaker, hypothesis speaker) pairing under
/// the chosen assignment. ref_speaker is empty for an unmatched hypothesis
/// speaker (pure insertions); hyp_speaker is empty for an unmatched
/// reference speaker (pure deletions).
struct SpeakerPairCounts {
  std::string ref_speaker;
  std::string hyp_speaker;
  EditCounts counts;
};

struct CpWerResult {
  EditCounts counts;          // summed over speakers under the best mapping
  double cpwer = 0.0;         // NumErrors / ref_len; NaN when undefined
  bool undefined_rate = false;  // reference empty overall
  std::map<std::string, std::string> mapping;  // hyp speaker -> ref speaker
  std::vector<SpeakerPairCounts> per_speaker;
};

/// Per-reference-utterance error detail recovered from the alignment
/// traceback. Counts sum to the global counts as long as every hypothesis
/// speaker is matched to a real reference speaker (insertions of unmatched
/// hypothesis speakers have no reference utterance to land in).
struct UtteranceErrors {
  std::string ref_speaker;
  int utterance_index = 0;  // chronological index within the speaker
  double start_time = 0.0;
  EditCounts counts;
};

struct PerUtteranceReport {
  std::vector<UtteranceErrors> utterances;
};

/// Concatenated minimum-permutation WER. Per-speaker utterances are
/// concatenated in start-time order; the speaker assignment minimizing the
/// total edit distance is picked (exhaustively for <= 6 speakers, Hungarian
/// beyond). Unequal speaker counts are padded with empty pseudo-speakers:
/// unmatched reference speakers count as deletions of their full streams,
/// unmatched hypothesis speakers as insertions.
CpWerResult ComputeCpWer(const SpeakerStreams &ref, const SpeakerStreams &hyp,
                         PerUtteranceReport *per_utterance = nullptr);

/// Groups transcript utterances by speaker with scoring-time normalization
/// applied. Utterances normalizing to zero tokens are kept (empty) so
/// utterance indices stay aligned with the transcript.
SpeakerStreams BuildSpeakerStreams(
    const std::vector<TranscriptUtterance> &utterances,
    const ReplacementTable &table = ReplacementTable::Default());

}  // namespace syncscore

#endif  // SYNCSCORE_CPWER_H_
