// core/include/syncscore/features.h

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

#ifndef SYNCSCORE_FEATURES_H_
#define SYNCSCORE_FEATURES_H_

#include <span>
#include <vector>

namespace syncscore {

struct FrameSpec {
  double frame_len = 0.025;    // seconds
  double frame_shift = 0.010;  // seconds
};

struct MfccOptions {
  FrameSpec frame;
  int num_coeffs = 20;
  int num_mel_bins = 26;
  double low_freq = 40.0;
  double high_freq = 0.0;  // 0 means Nyquist
  // When false, coefficients start at c1; c0 tracks overall level and
  // drowns out spectral shape in cosine comparisons.
  bool include_c0 = true;
};

/// MFCC matrix, one row per frame. Frames are Hann-windowed with
/// pre-emphasis 0.97; log mel energies are floored before the DCT.
std::vector<std::vector<float>> ComputeMfcc(std::span<const float> samples,
                                            int sample_rate,
                                            const MfccOptions &opts = {});

/// Per-frame log mean-square energy.
std::vector<float> FrameLogEnergy(std::span<const float> samples,
                                  int sample_rate, const FrameSpec &spec = {});

}  // namespace syncscore

#endif  // SYNCSCORE_FEATURES_H_
