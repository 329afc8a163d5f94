// core/src/transcript.cc

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

#include "syncscore/transcript.h"

#include <cmath>

#include <nlohmann/json.hpp>

#include "syncscore/error.h"

namespace syncscore {

using nlohmann::json;

namespace {

double NumberField(const json &obj, const char *field, std::size_t index) {
  if (!obj.contains(field))
    throw ParseError("utterance " + std::to_string(index) +
                     ": missing field '" + field + "'");
  const json &v = obj.at(field);
  if (!v.is_number())
    throw ParseError("utterance " + std::to_string(index) + ": field '" +
                     field + "' must be a number (decimal seconds)");
  const double d = v.get<double>();
  if (!std::isfinite(d))
    throw ParseError("utterance " + std::to_string(index) + ": field '" +
                     field + "' is not finite");
  return d;
}

std::string StringField(const json &obj, const char *field,
                        std::size_t index) {
  if (!obj.contains(field))
    throw ParseError("utterance " + std::to_string(index) +
                     ": missing field '" + field + "'");
  const json &v = obj.at(field);
  if (!v.is_string())
    throw ParseError("utterance " + std::to_string(index) + ": field '" +
                     field + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

std::vector<TranscriptUtterance> ParseTranscriptJson(const std::string &text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_array())
    throw ParseError("transcript must be a JSON array of utterance objects");

  std::vector<TranscriptUtterance> utts;
  utts.reserve(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    const json &obj = root[i];
    if (!obj.is_object())
      throw ParseError("utterance " + std::to_string(i) + ": not an object");
    TranscriptUtterance u;
    u.session_id = StringField(obj, "session_id", i);
    u.speaker = StringField(obj, "speaker", i);
    u.start_time = NumberField(obj, "start_time", i);
    u.end_time = NumberField(obj, "end_time", i);
    u.words = StringField(obj, "words", i);
    if (u.speaker.empty())
      throw ParseError("utterance " + std::to_string(i) +
                       ": field 'speaker' is empty");
    if (!(u.end_time > u.start_time))
      throw ParseError("utterance " + std::to_string(i) +
                       ": field 'end_time' must be > start_time");
    utts.push_back(std::move(u));
  }
  return utts;
}

std::string EmitTranscriptJson(const std::vector<TranscriptUtterance> &utts) {
  json root = json::array();
  for (const TranscriptUtterance &u : utts) {
    root.push_back({{"session_id", u.session_id},
                    {"speaker", u.speaker},
                    {"start_time", u.start_time},
                    {"end_time", u.end_time},
                    {"words", u.words}});
  }
  return root.dump(2) + "\n";
}

}  // namespace syncscore
