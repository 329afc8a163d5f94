// core/include/syncscore/textnorm.h

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

#ifndef SYNCSCORE_TEXTNORM_H_
#define SYNCSCORE_TEXTNORM_H_

#include <map>
#include <string>
#include <vector>

namespace syncscore {

/// Scoring-time token replacements with whole-word semantics. The default
/// table maps the filler variants mhm/mm/mmm to hmm; additional rules can
/// be loaded from a two-column text file (pattern replacement per line,
/// '#' comments allowed).
struct ReplacementTable {
  std::map<std::string, std::string> word_map;

  static ReplacementTable Default();
  static ReplacementTable FromText(const std::string &text);
};

/// Normalized word sequence for scoring.
struct TokenSeq {
  std::vector<std::string> tokens;
  bool operator==(const TokenSeq &) const = default;
};

/// Whitespace-tokenizes `raw`, drops the tags [noise], [inaudible],
/// [laughs] and [redacted], and applies whole-word replacements. Case is
/// preserved. If keep_noise_markers is set, [noise] is retained as a
/// sentinel token (for segment refinement, never for scoring).
TokenSeq Normalize(const std::string &raw, bool keep_noise_markers = false,
                   const ReplacementTable &table = ReplacementTable::Default());

}  // namespace syncscore

#endif  // SYNCSCORE_TEXTNORM_H_
