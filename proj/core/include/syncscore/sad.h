// core/include/syncscore/sad.h

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

#ifndef SYNCSCORE_SAD_H_
#define SYNCSCORE_SAD_H_

#include <vector>

#include "syncscore/audio.h"
#include "syncscore/features.h"
#include "syncscore/intervals.h"

namespace syncscore {

/// Per-frame speech scores. speech_logits[t] > 0 favors speech at frame t;
/// the silence score is implicitly 0.
struct FramePosteriors {
  double frame_shift = 0.010;  // seconds
  std::vector<float> speech_logits;
};

struct SadOptions {
  double min_speech = 0.3;   // seconds
  double min_silence = 0.1;  // seconds
};

/// Maximum-likelihood speech/non-speech segmentation: Viterbi decoding over
/// a two-class HMM whose states are expanded into duration-enforcing chains
/// (min_speech/frame_shift speech states, min_silence/frame_shift silence
/// states). Every output speech interval is >= min_speech long and every
/// gap between output intervals is >= min_silence; leading and trailing
/// silence are unconstrained. Ties prefer silence.
std::vector<Interval> SadDecode(const FramePosteriors &posteriors,
                                const SadOptions &opts = {});

/// Energy front-end standing in for a trained speech/non-speech model:
/// per-frame log energy mapped through an affine transform calibrated from
/// the 10th/90th energy percentiles to a logistic-style score.
FramePosteriors EnergySadFrontend(const AudioSignal &signal,
                                  const FrameSpec &frame = {});

}  // namespace syncscore

#endif  // SYNCSCORE_SAD_H_
