// core/include/syncscore/ctm.h

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

#ifndef SYNCSCORE_CTM_H_
#define SYNCSCORE_CTM_H_

#include <string>
#include <vector>

namespace syncscore {

/// One word of a time-marked alignment (CTM line:
/// "recording channel onset duration word [speaker]"). The sixth column is
/// an extension carrying the speaker label for refinement; it defaults to
/// "<NA>" when absent.
struct CtmWord {
  std::string recording_id;
  std::string channel = "1";
  double onset = 0.0;     // seconds, >= 0
  double duration = 0.0;  // seconds, >= 0
  std::string word;
  std::string speaker = "<NA>";

  double End() const { return onset + duration; }
  bool operator==(const CtmWord &) const = default;
};

/// Parses CTM text; empty lines and lines starting with ';;' are skipped.
/// Throws ParseError with line numbers on malformed lines.
std::vector<CtmWord> ParseCtm(const std::string &text);

std::string EmitCtm(const std::vector<CtmWord> &words);

}  // namespace syncscore

#endif  // SYNCSCORE_CTM_H_
