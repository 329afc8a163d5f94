// core/src/edits.cc

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

#include "syncscore/edits.h"

#include <nlohmann/json.hpp>

#include "syncscore/error.h"

namespace syncscore {

using nlohmann::json;

namespace {

void ValidateDevice(const std::string &device, const DeviceEdits &edits) {
  std::int64_t prev_end = -1;
  for (std::size_t i = 0; i < edits.drop_insertions.size(); ++i) {
    const DropInsertion &ins = edits.drop_insertions[i];
    if (ins.position < 0)
      throw ParseError("device " + device +
                       ": drop_insertions.position must be >= 0");
    if (ins.count <= 0)
      throw ParseError("device " + device +
                       ": drop_insertions.count must be > 0");
    if (i > 0 && ins.position < edits.drop_insertions[i - 1].position)
      throw ParseError("device " + device +
                       ": drop_insertions must be sorted by position");
  }
  if (edits.speed_segments.empty())
    throw ParseError("device " + device +
                     ": at least one speed segment required");
  for (std::size_t i = 0; i < edits.speed_segments.size(); ++i) {
    const SpeedSegment &seg = edits.speed_segments[i];
    if (seg.start_sample < 0)
      throw ParseError("device " + device +
                       ": speed_segments.start_sample must be >= 0");
    if (seg.start_sample <= prev_end)
      throw ParseError("device " + device +
                       ": speed_segments overlap or are unsorted");
    if (seg.end_sample) {
      if (*seg.end_sample <= seg.start_sample)
        throw ParseError("device " + device +
                         ": speed_segments.end_sample must be > start_sample");
      prev_end = *seg.end_sample - 1;
    } else if (i + 1 != edits.speed_segments.size()) {
      throw ParseError("device " + device +
                       ": only the last speed segment may be open-ended");
    }
    if (!(seg.speed_factor > 0.9 && seg.speed_factor < 1.1))
      throw ParseError("device " + device +
                       ": speed_factor must be in (0.9, 1.1)");
  }
}

std::int64_t IntField(const json &obj, const char *field,
                      const std::string &ctx) {
  if (!obj.contains(field))
    throw ParseError(ctx + ": missing field '" + field + "'");
  const json &v = obj.at(field);
  if (!v.is_number_integer())
    throw ParseError(ctx + ": field '" + field + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

EditsManifest ParseEditsManifest(const std::string &text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("session") ||
      !root.contains("devices"))
    throw ParseError("manifest must be an object with 'session' and 'devices'");
  if (!root["session"].is_string())
    throw ParseError("field 'session' must be a string");
  if (!root["devices"].is_object())
    throw ParseError("field 'devices' must be an object");

  EditsManifest manifest;
  manifest.session_id = root["session"].get<std::string>();
  for (const auto &[device, body] : root["devices"].items()) {
    if (!body.is_object())
      throw ParseError("device " + device + ": entry must be an object");
    DeviceEdits edits;
    if (body.contains("drop_insertions")) {
      if (!body["drop_insertions"].is_array())
        throw ParseError("device " + device +
                         ": 'drop_insertions' must be an array");
      for (const json &e : body["drop_insertions"]) {
        const std::string ctx = "device " + device + " drop_insertions";
        edits.drop_insertions.push_back(
            {IntField(e, "position", ctx), IntField(e, "count", ctx)});
      }
    }
    if (!body.contains("speed_segments") || !body["speed_segments"].is_array())
      throw ParseError("device " + device +
                       ": missing field 'speed_segments'");
    for (const json &e : body["speed_segments"]) {
      const std::string ctx = "device " + device + " speed_segments";
      SpeedSegment seg;
      seg.start_sample = IntField(e, "start_sample", ctx);
      if (e.contains("end_sample") && !e["end_sample"].is_null())
        seg.end_sample = IntField(e, "end_sample", ctx);
      if (!e.contains("speed_factor") || !e["speed_factor"].is_number())
        throw ParseError(ctx + ": missing numeric field 'speed_factor'");
      seg.speed_factor = e["speed_factor"].get<double>();
      edits.speed_segments.push_back(seg);
    }
    ValidateDevice(device, edits);
    manifest.devices.emplace(device, std::move(edits));
  }
  return manifest;
}

std::string EmitEditsManifest(const EditsManifest &manifest) {
  json devices = json::object();
  for (const auto &[device, edits] : manifest.devices) {
    json drops = json::array();
    for (const DropInsertion &ins : edits.drop_insertions)
      drops.push_back({{"position", ins.position}, {"count", ins.count}});
    json segs = json::array();
    for (const SpeedSegment &seg : edits.speed_segments) {
      json s = {{"start_sample", seg.start_sample},
                {"speed_factor", seg.speed_factor}};
      if (seg.end_sample) s["end_sample"] = *seg.end_sample;
      segs.push_back(std::move(s));
    }
    devices[device] = {{"drop_insertions", std::move(drops)},
                       {"speed_segments", std::move(segs)}};
  }
  const json root = {{"session", manifest.session_id},
                     {"devices", std::move(devices)}};
  return root.dump(2) + "\n";
}

}  // namespace syncscore
