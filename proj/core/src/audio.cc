// core/src/audio.cc

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

#include "syncscore/audio.h"

#include <algorithm>

#include "syncscore/error.h"

namespace syncscore {

void AudioSignal::Check() const {
  if (sample_rate <= 0)
    throw ArgumentError("AudioSignal: sample_rate must be positive");
  if (channels.empty())
    throw ArgumentError("AudioSignal: at least one channel required");
  const std::size_t len = channels[0].size();
  for (const auto &ch : channels) {
    if (ch.size() != len)
      throw ArgumentError("AudioSignal: channels have unequal lengths");
  }
}

AudioSignal MonoDownmix(const AudioSignal &signal) {
  signal.Check();
  if (signal.NumChannels() == 1) return signal;
  AudioSignal mono(signal.sample_rate, 1, signal.NumSamples());
  const double scale = 1.0 / signal.NumChannels();
  auto &out = mono.channels[0];
  for (const auto &ch : signal.channels) {
    for (std::size_t n = 0; n < ch.size(); ++n) out[n] += ch[n];
  }
  for (auto &v : out) v = static_cast<float>(v * scale);
  return mono;
}

AudioSignal Slice(const AudioSignal &signal, std::int64_t begin,
                  std::int64_t count) {
  if (begin < 0 || count < 0 || begin + count > signal.NumSamples())
    throw ArgumentError("Slice: range outside signal");
  AudioSignal out;
  out.sample_rate = signal.sample_rate;
  out.channels.reserve(signal.channels.size());
  for (const auto &ch : signal.channels) {
    out.channels.emplace_back(ch.begin() + begin, ch.begin() + begin + count);
  }
  return out;
}

void Truncate(AudioSignal *signal, std::int64_t num_samples) {
  if (num_samples < 0) throw ArgumentError("Truncate: negative length");
  for (auto &ch : signal->channels) {
    if (static_cast<std::int64_t>(ch.size()) > num_samples)
      ch.resize(static_cast<std::size_t>(num_samples));
  }
}

}  // namespace syncscore
