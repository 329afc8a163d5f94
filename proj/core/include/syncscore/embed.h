// core/include/syncscore/embed.h

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

#ifndef SYNCSCORE_EMBED_H_
#define SYNCSCORE_EMBED_H_

#include <string>
#include <vector>

#include "syncscore/audio.h"
#include "syncscore/features.h"
#include "syncscore/intervals.h"
#include "syncscore/refine.h"

namespace syncscore {

/// A fixed-dimension feature summary of one subsegment. The segment's
/// speaker is unset until clustering assigns one.
struct SegmentEmbedding {
  UtteranceSegment segment;
  std::vector<float> vector;
};

struct EmbedOptions {
  double window = 1.5;  // subsegment length, seconds
  double hop = 0.75;    // subsegment hop, seconds
  FrameSpec frame;
  int num_mfcc = 20;
};

/// Slides subsegment windows over each speech interval and summarizes each
/// as the length-normalized [mean; stddev] of its MFCC frames. Intervals
/// shorter than the window produce a single subsegment covering the
/// interval; intervals shorter than one frame are skipped with a warning.
std::vector<SegmentEmbedding> EmbedSegments(
    const AudioSignal &signal, const IntervalSet &intervals,
    const EmbedOptions &opts = {}, std::vector<std::string> *warnings = nullptr);

double CosineDistance(const std::vector<float> &a, const std::vector<float> &b);

}  // namespace syncscore

#endif  // SYNCSCORE_EMBED_H_
