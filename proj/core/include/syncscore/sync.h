// core/include/syncscore/sync.h

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

#ifndef SYNCSCORE_SYNC_H_
#define SYNCSCORE_SYNC_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "syncscore/audio.h"
#include "syncscore/edits.h"
#include "syncscore/transcript.h"

namespace syncscore {

/// One cross-correlation delay measurement. `time` is the window center on
/// the reference timeline; `delay` is the device signal's lag relative to
/// the reference in seconds (positive = device lags); `confidence` is the
/// energy-normalized peak correlation in [0, 1].
struct DelayPoint {
  double time = 0.0;
  double delay = 0.0;
  double confidence = 0.0;
};

struct DelayTrack {
  std::vector<DelayPoint> points;
  double window_len = 0.0;
};

/// One affine regime of the delay-vs-time function:
/// delay(t) = slope * t + intercept for t in [t_start, t_end).
struct DriftSegment {
  double t_start = 0.0;
  double t_end = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  double DelayAt(double t) const { return slope * t + intercept; }
};

/// Linear (1 segment) or piecewise-linear (>= 2 contiguous segments) fit of
/// a delay track.
struct DriftFit {
  std::vector<DriftSegment> segments;
  double residual_rms = 0.0;

  static DriftFit Identity();
  /// Segment covering unified time t (clamped to the first/last segment).
  const DriftSegment &SegmentAt(double t) const;
  double DelayAt(double t) const { return SegmentAt(t).DelayAt(t); }
};

struct DelayEstimationOptions {
  double interval = 60.0;    // seconds between window centers
  double window_len = 10.0;  // correlation window, seconds (>= 1)
  double max_lag = 2.0;      // correlation search range, seconds
  bool phat_weighting = false;  // spectral whitening for noisy material
};

struct FitOptions {
  bool piecewise = false;
  int max_breakpoints = 1;
  double min_confidence = 0.1;   // delay points below this are dropped
  double min_improvement = 0.25;  // required SSE gain to accept a breakpoint
};

/// Inserts `count` zero samples at `position` of the corrected timeline for
/// every insertion, compensating capture-time frame drops. Every input
/// sample appears exactly once, in order; output length is input length
/// plus the sum of counts. Throws ArgumentError if insertions are unsorted
/// or positions lie beyond the output timeline.
AudioSignal InsertDroppedSamples(const AudioSignal &signal,
                                 std::span<const DropInsertion> insertions);

/// Estimates the device-vs-reference delay at regular intervals by
/// FFT-based cross-correlation of mean-removed mono windows, refined to
/// sub-sample precision by parabolic interpolation of the peak. Signals
/// must share a sample rate. Produces one point per interval where both
/// signals have full windows; a window longer than either signal yields an
/// empty track.
DelayTrack EstimateDelayTrack(const AudioSignal &device,
                              const AudioSignal &reference,
                              const DelayEstimationOptions &opts = {});

/// Least-squares fit of delay vs time. Points with confidence below
/// min_confidence are excluded. Piecewise mode needs >= 4 surviving points
/// and picks breakpoints by exhaustive residual minimization over point
/// indices, accepting a split only if it improves total squared residual
/// by at least min_improvement. Throws Error when too few points survive
/// (>= 2 linear, >= 4 piecewise).
DriftFit FitDrift(const DelayTrack &track, const FitOptions &opts = {});

/// Corrects a device signal onto the reference clock: output sample k is
/// the input evaluated at k * (1 + slope) + intercept * rate of the
/// segment covering output time k / rate (windowed-sinc polyphase
/// interpolation; plain integer shifts are bit-exact). Throws ArgumentError
/// when any |slope| >= 0.01 (degenerate fit guard).
AudioSignal ApplySpeed(const AudioSignal &signal, const DriftFit &fit);

struct SyncOptions {
  DelayEstimationOptions delay;
  FitOptions fit;
  int jobs = 1;  // devices processed concurrently when > 1
};

struct SyncResult {
  std::map<std::string, AudioSignal> devices;
  std::map<std::string, DriftFit> fits;
  std::map<std::string, DelayTrack> tracks;
};

/// Full two-stage synchronization: per device, zero-insertion from the
/// manifest, then drift estimation and correction against the reference;
/// finally all outputs are truncated to the shortest duration (including
/// the reference's). A device whose track yields fewer than 2 confident
/// points keeps its timeline (identity fit). Throws ConfigError if the
/// manifest is missing a device.
SyncResult SynchronizeSession(const std::map<std::string, AudioSignal> &devices,
                              const AudioSignal &reference,
                              const EditsManifest &manifest,
                              const SyncOptions &opts = {});

/// Maps a device-local time to the unified (reference) timeline under a
/// fit, and back.
double DeviceTimeToUnified(const DriftFit &fit, double device_time);
double UnifiedTimeToDevice(const DriftFit &fit, double unified_time);

/// Rewrites device-local utterance times onto the unified timeline so each
/// utterance has a single start/end valid on all synchronized devices.
/// Ordering by start time is preserved.
std::vector<TranscriptUtterance> AdjustTranscriptTimes(
    const std::vector<TranscriptUtterance> &utterances, const DriftFit &fit);

}  // namespace syncscore

#endif  // SYNCSCORE_SYNC_H_
