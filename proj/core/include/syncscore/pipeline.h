// core/include/syncscore/pipeline.h

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

#ifndef SYNCSCORE_PIPELINE_H_
#define SYNCSCORE_PIPELINE_H_

#include <string>
#include <vector>

#include "syncscore/ahc.h"
#include "syncscore/audio.h"
#include "syncscore/embed.h"
#include "syncscore/rttm.h"
#include "syncscore/sad.h"

namespace syncscore {

struct PipelineOptions {
  std::string recording_id = "rec";
  int num_speakers = 4;
  SadOptions sad;
  FrameSpec frame;
  EmbedOptions embed;
};

struct PipelineResult {
  std::vector<Interval> speech;      // SAD output
  std::vector<RttmSegment> segments;  // diarization output
  std::vector<std::string> warnings;
};

/// Single-recording inference: energy SAD scores, duration-constrained
/// Viterbi smoothing, subsegment embeddings, AHC with a known speaker
/// count. Deterministic: identical inputs produce identical RTTM bytes.
PipelineResult RunPipeline(const AudioSignal &signal,
                           const PipelineOptions &opts = {});

}  // namespace syncscore

#endif  // SYNCSCORE_PIPELINE_H_
