// core/include/syncscore/rttm.h

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

#ifndef SYNCSCORE_RTTM_H_
#define SYNCSCORE_RTTM_H_

#include <string>
#include <vector>

namespace syncscore {

/// One SPEAKER record of an RTTM file.
struct RttmSegment {
  std::string recording_id;
  double onset = 0.0;     // seconds, >= 0
  double duration = 0.0;  // seconds, > 0
  std::string speaker;

  double Offset() const { return onset + duration; }
  bool operator==(const RttmSegment &) const = default;
};

/// Parses SPEAKER lines of standard 9- or 10-field RTTM text. Lines of
/// other types are ignored. Throws ParseError (with line number) on wrong
/// field counts, non-numeric times, or invariant violations.
std::vector<RttmSegment> ParseRttm(const std::string &text);

/// Emits SPEAKER lines sorted by (recording_id, onset, speaker), with times
/// printed at fixed 2-decimal precision and "<NA>" placeholders, e.g.
///   SPEAKER S02 1 10.00 2.50 <NA> <NA> P05 <NA> <NA>
std::string EmitRttm(std::vector<RttmSegment> segments);

}  // namespace syncscore

#endif  // SYNCSCORE_RTTM_H_
