// core/include/syncscore/wav-io.h

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

#ifndef SYNCSCORE_WAV_IO_H_
#define SYNCSCORE_WAV_IO_H_

#include <string>

#include "syncscore/audio.h"

namespace syncscore {

/// Reads a RIFF WAV file. Supported codecs: PCM 16-bit and IEEE float
/// 32-bit, little-endian. No resampling; the exact sample count is
/// preserved. PCM16 samples are scaled by 1/32768.
/// Throws FormatError on malformed headers or unsupported codecs.
AudioSignal ReadWav(const std::string &path);

/// Parses WAV content from a memory buffer (same contract as ReadWav).
AudioSignal ParseWav(const std::string &bytes);

/// Writes PCM 16-bit little-endian WAV (canonical 44-byte header).
/// Samples are scaled by 32768 and clamped to [-32768, 32767], making
/// WriteWav an exact inverse of ReadWav for PCM16 sources.
void WriteWav(const AudioSignal &signal, const std::string &path);

/// Serializes to PCM16 WAV bytes (same contract as WriteWav).
std::string SerializeWav(const AudioSignal &signal);

}  // namespace syncscore

#endif  // SYNCSCORE_WAV_IO_H_
