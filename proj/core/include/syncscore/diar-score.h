// core/include/syncscore/diar-score.h

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

#ifndef SYNCSCORE_DIAR_SCORE_H_
#define SYNCSCORE_DIAR_SCORE_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "syncscore/intervals.h"
#include "syncscore/rttm.h"

namespace syncscore {

struct DiarOptions {
  double collar = 0.0;        // no-score zone around reference boundaries
  bool score_overlap = true;  // score regions where reference speakers overlap
};

/// Diarization error components for one recording, in seconds.
struct DiarScore {
  double missed = 0.0;
  double false_alarm = 0.0;
  double confusion = 0.0;
  double total_ref_speech = 0.0;  // sum over speakers within the scored zone
  double scored_time = 0.0;
  double der = 0.0;  // (missed + false_alarm + confusion) / total_ref_speech
  double jer = 0.0;  // mean over reference speakers of 1 - intersection/union
  std::map<std::string, std::string> mapping;  // ref speaker -> hyp speaker
  std::map<std::string, double> jer_per_speaker;
};

/// Scores one recording. The timeline is partitioned into regions that are
/// homogeneous in active speakers; the reference-to-hypothesis speaker
/// mapping maximizes globally attributed overlap time. The collar excludes
/// +/- collar around every reference segment boundary from DER scoring;
/// JER is computed collar-free from the same mapping (dscore convention).
DiarScore ScoreDiarization(std::span<const RttmSegment> ref,
                           std::span<const RttmSegment> hyp,
                           const DiarOptions &opts = {});

/// Jaccard error rate alone (collar-free, overlaps scored).
double Jer(std::span<const RttmSegment> ref, std::span<const RttmSegment> hyp);

/// Groups segments by recording_id and scores each recording; `overall`
/// pools the time components across recordings and averages JER over all
/// reference speakers.
struct DiarReport {
  std::map<std::string, DiarScore> per_recording;
  DiarScore overall;
};
DiarReport ScoreDiarizationByRecording(std::span<const RttmSegment> ref,
                                       std::span<const RttmSegment> hyp,
                                       const DiarOptions &opts = {},
                                       int jobs = 1);

/// Speech activity detection scores as percentages of total scored time
/// (so total == missed + false_alarm exactly).
struct SadScore {
  double missed_pct = 0.0;
  double false_alarm_pct = 0.0;
  double total_error_pct = 0.0;
};

enum class SadNormalization {
  kTotalTime,  // percentages of total recording time
  kRefSpeech,  // percentages of total reference speech time
};

/// total_time must be positive and at least the span of both interval sets.
SadScore ScoreSad(const IntervalSet &ref_speech, const IntervalSet &hyp_speech,
                  double total_time,
                  SadNormalization norm = SadNormalization::kTotalTime);

/// Speech/nonspeech view of RTTM segments (speaker labels collapsed).
IntervalSet SpeechRegions(std::span<const RttmSegment> segments);

}  // namespace syncscore

#endif  // SYNCSCORE_DIAR_SCORE_H_
