// core/include/syncscore/audio.h

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

#ifndef SYNCSCORE_AUDIO_H_
#define SYNCSCORE_AUDIO_H_

#include <cstdint>
#include <vector>

namespace syncscore {

/// Sampled PCM audio. Samples are normalized amplitudes in [-1, 1]; all
/// channels have equal length.
struct AudioSignal {
  int sample_rate = 0;
  std::vector<std::vector<float>> channels;

  AudioSignal() = default;
  AudioSignal(int rate, int num_channels, std::int64_t num_samples)
      : sample_rate(rate),
        channels(num_channels,
                 std::vector<float>(static_cast<std::size_t>(num_samples))) {}

  int NumChannels() const { return static_cast<int>(channels.size()); }
  std::int64_t NumSamples() const {
    return channels.empty() ? 0
                            : static_cast<std::int64_t>(channels[0].size());
  }
  double Duration() const {
    return sample_rate > 0
               ? static_cast<double>(NumSamples()) / sample_rate
               : 0.0;
  }

  /// Throws ArgumentError if the invariants do not hold (positive rate,
  /// >= 1 channel, equal channel lengths).
  void Check() const;
};

/// Average of all channels; a 1-channel signal is returned as a copy.
AudioSignal MonoDownmix(const AudioSignal &signal);

/// Keeps samples [begin, begin + count) of every channel.
AudioSignal Slice(const AudioSignal &signal, std::int64_t begin,
                  std::int64_t count);

/// Truncates every channel to num_samples (no-op if already shorter).
void Truncate(AudioSignal *signal, std::int64_t num_samples);

}  // namespace syncscore

#endif  // SYNCSCORE_AUDIO_H_
