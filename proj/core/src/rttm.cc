// core/src/rttm.cc

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

#include "syncscore/rttm.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "syncscore/error.h"

namespace syncscore {

namespace {

std::vector<std::string> SplitFields(const std::string &line) {
  std::vector<std::string> fields;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) fields.push_back(tok);
  return fields;
}

double ParseTime(const std::string &tok, const char *what, int line_no) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(std::string("non-numeric ") + what + " '" + tok + "'",
                     line_no);
  if (!std::isfinite(value))
    throw ParseError(std::string(what) + " is not finite", line_no);
  return value;
}

}  // namespace

std::vector<RttmSegment> ParseRttm(const std::string &text) {
  std::vector<RttmSegment> segments;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = SplitFields(line);
    if (fields.empty()) continue;
    if (fields[0] != "SPEAKER") continue;  // other record types ignored
    if (fields.size() != 9 && fields.size() != 10)
      throw ParseError("SPEAKER line has " + std::to_string(fields.size()) +
                           " fields, expected 9 or 10",
                       line_no);
    RttmSegment seg;
    seg.recording_id = fields[1];
    seg.onset = ParseTime(fields[3], "onset", line_no);
    seg.duration = ParseTime(fields[4], "duration", line_no);
    seg.speaker = fields[7];
    if (seg.onset < 0.0) throw ParseError("negative onset", line_no);
    if (seg.duration <= 0.0)
      throw ParseError("duration must be > 0", line_no);
    segments.push_back(std::move(seg));
  }
  return segments;
}

std::string EmitRttm(std::vector<RttmSegment> segments) {
  std::sort(segments.begin(), segments.end(),
            [](const RttmSegment &a, const RttmSegment &b) {
              if (a.recording_id != b.recording_id)
                return a.recording_id < b.recording_id;
              if (a.onset != b.onset) return a.onset < b.onset;
              return a.speaker < b.speaker;
            });
  std::string out;
  char buf[64];
  for (const RttmSegment &seg : segments) {
    out += "SPEAKER ";
    out += seg.recording_id;
    std::snprintf(buf, sizeof(buf), " 1 %.2f %.2f <NA> <NA> ", seg.onset,
                  seg.duration);
    out += buf;
    out += seg.speaker;
    out += " <NA> <NA>\n";
  }
  return out;
}

}  // namespace syncscore
