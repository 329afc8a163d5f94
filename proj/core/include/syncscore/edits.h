// core/include/syncscore/edits.h

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

#ifndef SYNCSCORE_EDITS_H_
#define SYNCSCORE_EDITS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace syncscore {

/// Zeros to insert at `position` of the corrected (post-insertion) timeline,
/// in samples at the device's native rate.
struct DropInsertion {
  std::int64_t position = 0;
  std::int64_t count = 0;
  bool operator==(const DropInsertion &) const = default;
};

/// One clock-speed regime of a device, in samples of the device timeline.
/// end_sample is exclusive; the last segment of a device is open-ended
/// (no end_sample). speed_factor is the device/reference rate ratio.
struct SpeedSegment {
  std::int64_t start_sample = 0;
  std::optional<std::int64_t> end_sample;
  double speed_factor = 1.0;
  bool operator==(const SpeedSegment &) const = default;
};

struct DeviceEdits {
  std::vector<DropInsertion> drop_insertions;
  std::vector<SpeedSegment> speed_segments;
  bool operator==(const DeviceEdits &) const = default;
};

/// Per-device frame-drop insertions and speed-segment corrections for one
/// session.
struct EditsManifest {
  std::string session_id;
  std::map<std::string, DeviceEdits> devices;
  bool operator==(const EditsManifest &) const = default;
};

/// Parses the edits-manifest JSON (schema documented in the repo README).
/// Validates: insertions sorted by position with counts > 0; speed segments
/// sorted, non-overlapping, factors in (0.9, 1.1), at least one per device,
/// only the last open-ended. Throws ParseError naming the field.
EditsManifest ParseEditsManifest(const std::string &text);

std::string EmitEditsManifest(const EditsManifest &manifest);

}  // namespace syncscore

#endif  // SYNCSCORE_EDITS_H_
