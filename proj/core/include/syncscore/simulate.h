// core/include/syncscore/simulate.h

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

#ifndef SYNCSCORE_SIMULATE_H_
#define SYNCSCORE_SIMULATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syncscore/audio.h"
#include "syncscore/edits.h"
#include "syncscore/rttm.h"
#include "syncscore/sync.h"
#include "syncscore/transcript.h"

namespace syncscore {

/// A capture-time loss of `count` samples at `time` seconds of the device
/// timeline.
struct DropEvent {
  double time = 0.0;
  std::int64_t count = 0;
};

struct DeviceSimSpec {
  std::string id;
  double drift_slope = 0.0;                 // d delay / d time, dimensionless
  std::optional<double> drift_breakpoint;   // seconds; enables two regimes
  double drift_slope2 = 0.0;                // slope after the breakpoint
  std::vector<DropEvent> drop_events;
  double delay = 0.0;   // constant device lag, seconds
  double snr_db = 60.0;  // >= 150 means noise-free
};

/// Deterministic synthetic session: speakers are band-limited noise bursts
/// in disjoint bands on a scheduled timeline; devices are delayed,
/// attenuated mixtures with additive noise, clock drift and frame drops.
struct SessionSpec {
  std::string session_id = "S01";
  double duration = 60.0;  // seconds
  int num_speakers = 4;
  int num_devices = 2;
  double overlap_ratio = 0.0;  // fraction of utterances overlapping the previous
  int sample_rate = 16000;
  std::uint64_t seed = 1;
  std::vector<DeviceSimSpec> devices;  // defaults U01..U0n when empty
};

SessionSpec ParseSessionSpec(const std::string &json_text);
std::string EmitSessionSpec(const SessionSpec &spec);

struct GeneratedSession {
  AudioSignal reference;
  std::map<std::string, AudioSignal> devices;
  EditsManifest manifest;                     // ground-truth edits
  std::vector<TranscriptUtterance> transcript;
  std::vector<RttmSegment> rttm;              // same segments as transcript
  std::map<std::string, DriftFit> true_drift;  // delay vs unified time
};

/// Generates the session. Drops delete samples from the corrupted signals
/// and the manifest records the matching zero-insertion positions, so
/// InsertDroppedSamples is the exact inverse. Fully deterministic given the
/// seed. Throws ArgumentError on infeasible specs (e.g. overlap with a
/// single speaker).
GeneratedSession GenerateSession(const SessionSpec &spec);

/// Applies clock drift (forward warp by the given delay-vs-time function)
/// and then frame drops to a clean signal. Exposed so tests can compose
/// corruptions; GenerateSession uses the same machinery.
AudioSignal Corrupt(const AudioSignal &signal, const DriftFit &drift,
                    std::span<const DropEvent> drops);

}  // namespace syncscore

#endif  // SYNCSCORE_SIMULATE_H_
