// core/include/syncscore/transcript.h

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

#ifndef SYNCSCORE_TRANSCRIPT_H_
#define SYNCSCORE_TRANSCRIPT_H_

#include <string>
#include <vector>

namespace syncscore {

/// One utterance of a session transcript. Times are decimal seconds on the
/// unified session timeline; `words` is the raw transcription and may
/// contain tags such as [noise].
struct TranscriptUtterance {
  std::string session_id;
  std::string speaker;
  double start_time = 0.0;
  double end_time = 0.0;
  std::string words;

  bool operator==(const TranscriptUtterance &) const = default;
};

/// Parses a JSON array of utterance objects with fields
/// {session_id, speaker, start_time, end_time, words}. Throws ParseError
/// naming the offending field on schema or invariant violations
/// (end_time must be > start_time, speaker non-empty).
std::vector<TranscriptUtterance> ParseTranscriptJson(const std::string &text);

std::string EmitTranscriptJson(const std::vector<TranscriptUtterance> &utts);

}  // namespace syncscore

#endif  // SYNCSCORE_TRANSCRIPT_H_
