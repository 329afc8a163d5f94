// core/src/ctm.cc

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

#include "syncscore/ctm.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "syncscore/error.h"

namespace syncscore {

namespace {
double ParseTime(const std::string &tok, const char *what, int line_no) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() ||
      !std::isfinite(value))
    throw ParseError(std::string("non-numeric ") + what + " '" + tok + "'",
                     line_no);
  return value;
}
}  // namespace

std::vector<CtmWord> ParseCtm(const std::string &text) {
  std::vector<CtmWord> words;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream iss(line);
    std::vector<std::string> fields;
    std::string tok;
    while (iss >> tok) fields.push_back(tok);
    if (fields.empty()) continue;
    if (fields[0].rfind(";;", 0) == 0) continue;
    if (fields.size() < 5 || fields.size() > 6)
      throw ParseError("CTM line has " + std::to_string(fields.size()) +
                           " fields, expected 5 or 6",
                       line_no);
    CtmWord w;
    w.recording_id = fields[0];
    w.channel = fields[1];
    w.onset = ParseTime(fields[2], "onset", line_no);
    w.duration = ParseTime(fields[3], "duration", line_no);
    w.word = fields[4];
    if (fields.size() == 6) w.speaker = fields[5];
    if (w.onset < 0.0) throw ParseError("negative onset", line_no);
    if (w.duration < 0.0) throw ParseError("negative duration", line_no);
    if (w.word.empty()) throw ParseError("empty word", line_no);
    words.push_back(std::move(w));
  }
  return words;
}

std::string EmitCtm(const std::vector<CtmWord> &words) {
  std::string out;
  char buf[64];
  for (const CtmWord &w : words) {
    out += w.recording_id;
    out += ' ';
    out += w.channel;
    std::snprintf(buf, sizeof(buf), " %.3f %.3f ", w.onset, w.duration);
    out += buf;
    out += w.word;
    if (w.speaker != "<NA>") {
      out += ' ';
      out += w.speaker;
    }
    out += '\n';
  }
  return out;
}

}  // namespace syncscore
