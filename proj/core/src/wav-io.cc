// core/src/wav-io.cc

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

#include "syncscore/wav-io.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "syncscore/error.h"

namespace syncscore {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;

std::uint32_t ReadU32(const std::string &s, std::size_t off) {
  std::uint32_t v;
  std::memcpy(&v, s.data() + off, 4);
  return v;
}

std::uint16_t ReadU16(const std::string &s, std::size_t off) {
  std::uint16_t v;
  std::memcpy(&v, s.data() + off, 2);
  return v;
}

void AppendU32(std::string *s, std::uint32_t v) {
  s->append(reinterpret_cast<const char *>(&v), 4);
}

void AppendU16(std::string *s, std::uint16_t v) {
  s->append(reinterpret_cast<const char *>(&v), 2);
}

}  // namespace

AudioSignal ParseWav(const std::string &bytes) {
  static_assert(std::endian::native == std::endian::little,
                "WAV I/O assumes a little-endian host");
  if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0 ||
      bytes.compare(8, 4, "WAVE") != 0)
    throw FormatError("not a RIFF/WAVE file");

  std::uint16_t format = 0, num_channels = 0, bits = 0;
  std::uint32_t sample_rate = 0;
  bool have_fmt = false;
  std::size_t data_off = 0, data_len = 0;
  bool have_data = false;

  std::size_t off = 12;
  while (off + 8 <= bytes.size()) {
    const std::string id = bytes.substr(off, 4);
    const std::uint32_t chunk_len = ReadU32(bytes, off + 4);
    const std::size_t body = off + 8;
    if (body + chunk_len > bytes.size())
      throw FormatError("truncated chunk '" + id + "'");
    if (id == "fmt ") {
      if (chunk_len < 16) throw FormatError("fmt chunk too short");
      format = ReadU16(bytes, body);
      num_channels = ReadU16(bytes, body + 2);
      sample_rate = ReadU32(bytes, body + 4);
      bits = ReadU16(bytes, body + 14);
      have_fmt = true;
    } else if (id == "data") {
      data_off = body;
      data_len = chunk_len;
      have_data = true;
    }
    off = body + chunk_len + (chunk_len % 2);  // chunks are word-aligned
  }
  if (!have_fmt) throw FormatError("missing fmt chunk");
  if (!have_data) throw FormatError("missing data chunk");
  if (num_channels == 0) throw FormatError("zero channels");
  if (sample_rate == 0) throw FormatError("zero sample rate");

  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool float32 = format == kFormatIeeeFloat && bits == 32;
  if (!pcm16 && !float32)
    throw FormatError("unsupported codec: format tag " +
                      std::to_string(format) + ", " + std::to_string(bits) +
                      " bits (PCM16 and float32 supported)");

  const std::size_t bytes_per_sample = pcm16 ? 2 : 4;
  const std::size_t frame_size = bytes_per_sample * num_channels;
  if (data_len % frame_size != 0)
    throw FormatError("data chunk size is not a whole number of frames");
  const std::size_t num_samples = data_len / frame_size;

  AudioSignal signal(static_cast<int>(sample_rate), num_channels,
                     static_cast<std::int64_t>(num_samples));
  const char *p = bytes.data() + data_off;
  for (std::size_t n = 0; n < num_samples; ++n) {
    for (int c = 0; c < num_channels; ++c) {
      if (pcm16) {
        std::int16_t v;
        std::memcpy(&v, p, 2);
        p += 2;
        signal.channels[c][n] = static_cast<float>(v) / 32768.0f;
      } else {
        float v;
        std::memcpy(&v, p, 4);
        p += 4;
        signal.channels[c][n] = v;
      }
    }
  }
  return signal;
}

AudioSignal ReadWav(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ParseWav(buf.str());
  } catch (const FormatError &e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string SerializeWav(const AudioSignal &signal) {
  signal.Check();
  const std::uint16_t num_channels =
      static_cast<std::uint16_t>(signal.NumChannels());
  const std::uint32_t num_samples =
      static_cast<std::uint32_t>(signal.NumSamples());
  const std::uint32_t data_len = num_samples * num_channels * 2;

  std::string out;
  out.reserve(44 + data_len);
  out.append("RIFF");
  AppendU32(&out, 36 + data_len);
  out.append("WAVE");
  out.append("fmt ");
  AppendU32(&out, 16);
  AppendU16(&out, kFormatPcm);
  AppendU16(&out, num_channels);
  AppendU32(&out, static_cast<std::uint32_t>(signal.sample_rate));
  AppendU32(&out, static_cast<std::uint32_t>(signal.sample_rate) *
                      num_channels * 2);       // byte rate
  AppendU16(&out, num_channels * 2);           // block align
  AppendU16(&out, 16);                         // bits per sample
  out.append("data");
  AppendU32(&out, data_len);

  for (std::uint32_t n = 0; n < num_samples; ++n) {
    for (int c = 0; c < num_channels; ++c) {
      const double scaled = std::lround(signal.channels[c][n] * 32768.0);
      const std::int16_t v = static_cast<std::int16_t>(
          std::clamp<double>(scaled, -32768.0, 32767.0));
      out.append(reinterpret_cast<const char *>(&v), 2);
    }
  }
  return out;
}

void WriteWav(const AudioSignal &signal, const std::string &path) {
  const std::string bytes = SerializeWav(signal);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open file for writing: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("write failed: " + path);
}

}  // namespace syncscore
