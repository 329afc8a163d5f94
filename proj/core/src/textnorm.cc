// core/src/textnorm.cc

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

#include "syncscore/textnorm.h"

#include <array>
#include <sstream>

#include "syncscore/error.h"

namespace syncscore {

namespace {
constexpr std::array<const char *, 4> kFilteredTags = {
    "[noise]", "[inaudible]", "[laughs]", "[redacted]"};
}

ReplacementTable ReplacementTable::Default() {
  ReplacementTable table;
  table.word_map = {{"mhm", "hmm"}, {"mm", "hmm"}, {"mmm", "hmm"}};
  return table;
}

ReplacementTable ReplacementTable::FromText(const std::string &text) {
  ReplacementTable table = Default();
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream iss(line);
    std::string pattern, replacement, extra;
    if (!(iss >> pattern)) continue;
    if (pattern[0] == '#') continue;
    if (!(iss >> replacement) || (iss >> extra))
      throw ParseError("expected two columns: pattern replacement", line_no);
    table.word_map[pattern] = replacement;
  }
  return table;
}

TokenSeq Normalize(const std::string &raw, bool keep_noise_markers,
                   const ReplacementTable &table) {
  TokenSeq out;
  std::istringstream iss(raw);
  std::string tok;
  while (iss >> tok) {
    bool is_tag = false;
    for (const char *tag : kFilteredTags) {
      if (tok == tag) {
        is_tag = true;
        break;
      }
    }
    if (is_tag) {
      if (keep_noise_markers && tok == "[noise]") out.tokens.push_back(tok);
      continue;
    }
    const auto it = table.word_map.find(tok);
    out.tokens.push_back(it != table.word_map.end() ? it->second : tok);
  }
  return out;
}

}  // namespace syncscore
