// core/src/simulate.cc

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

#include "syncscore/simulate.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "syncscore/dsp.h"
#include "syncscore/error.h"

namespace syncscore {

using nlohmann::json;

namespace {

// splitmix64: tiny, portable, stable across toolchains. Distribution code
// is hand-rolled so generated fixtures are bit-reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t NextU64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double NextDouble() {  // [0, 1)
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) {
    return lo + (hi - lo) * NextDouble();
  }
  int NextInt(int n) {  // [0, n)
    return static_cast<int>(NextU64() % static_cast<std::uint64_t>(n));
  }
  double Gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = std::max(NextDouble(), 1e-300);
    const double u2 = NextDouble();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

std::uint64_t DeviceSeed(std::uint64_t base, std::size_t index) {
  Rng mix(base + 0x9e3779b97f4a7c15ULL * (index + 1));
  return mix.NextU64();
}

void ValidateSpec(const SessionSpec &spec) {
  if (!(spec.duration > 0.0))
    throw ArgumentError("simulate: duration must be > 0");
  if (spec.num_speakers < 1)
    throw ArgumentError("simulate: num_speakers must be >= 1");
  if (spec.sample_rate < 8000)
    throw ArgumentError("simulate: sample_rate must be >= 8000");
  if (spec.overlap_ratio < 0.0 || spec.overlap_ratio > 1.0)
    throw ArgumentError("simulate: overlap_ratio must be in [0, 1]");
  if (spec.overlap_ratio > 0.0 && spec.num_speakers < 2)
    throw ArgumentError(
        "simulate: overlapping schedule is infeasible with one speaker");
  if (spec.devices.empty() && spec.num_devices < 1)
    throw ArgumentError("simulate: num_devices must be >= 1");
  for (const DeviceSimSpec &dev : spec.devices) {
    if (std::abs(dev.drift_slope) > 1e-3 || std::abs(dev.drift_slope2) > 1e-3)
      throw ArgumentError("simulate: |drift_slope| must be <= 1e-3");
    if (dev.drift_breakpoint &&
        !(*dev.drift_breakpoint > 0.0 && *dev.drift_breakpoint < spec.duration))
      throw ArgumentError(
          "simulate: drift_breakpoint must lie inside the session");
    for (const DropEvent &drop : dev.drop_events) {
      if (drop.count <= 0)
        throw ArgumentError("simulate: drop count must be > 0");
      if (drop.time < 0.0)
        throw ArgumentError("simulate: drop time must be >= 0");
    }
  }
}

DriftFit BuildTrueDrift(const DeviceSimSpec &dev, double duration) {
  DriftFit fit;
  if (dev.drift_breakpoint) {
    const double tb = *dev.drift_breakpoint;
    const double s1 = dev.drift_slope, s2 = dev.drift_slope2;
    // Continuous delay: intercept2 makes both regimes meet at tb.
    fit.segments.push_back({0.0, tb, s1, dev.delay});
    fit.segments.push_back({tb, duration, s2, dev.delay + (s1 - s2) * tb});
  } else {
    fit.segments.push_back({0.0, duration, dev.drift_slope, dev.delay});
  }
  return fit;
}

// Forward warp: builds the device view of a clean unified-timeline signal
// under a delay-vs-time function (the inverse map of ApplySpeed).
AudioSignal ForwardWarp(const AudioSignal &signal, const DriftFit &fit) {
  struct Piece {
    std::int64_t k_begin, k_end;
    double a, b;
  };
  const int rate = signal.sample_rate;
  const std::int64_t in_len = signal.NumSamples();
  static const SincInterpolator interp;

  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < fit.segments.size(); ++i) {
    const DriftSegment &seg = fit.segments[i];
    const double f = 1.0 + seg.slope;
    Piece piece;
    // Device-time range covered by this unified-time segment.
    piece.k_begin =
        i == 0 ? 0
               : std::llround((seg.t_start * f + seg.intercept) * rate);
    piece.k_end = i + 1 == fit.segments.size()
                      ? std::numeric_limits<std::int64_t>::max()
                      : std::llround((seg.t_end * f + seg.intercept) * rate);
    piece.a = 1.0 / f;
    piece.b = -seg.intercept * rate / f;
    pieces.push_back(piece);
  }

  std::int64_t out_len = 0;
  for (const Piece &piece : pieces) {
    const std::int64_t k_stop = static_cast<std::int64_t>(
        std::ceil((static_cast<double>(in_len) - piece.b) / piece.a));
    out_len = std::clamp(k_stop, piece.k_begin, piece.k_end);
    if (out_len < piece.k_end) break;
  }

  AudioSignal out;
  out.sample_rate = rate;
  out.channels.resize(signal.channels.size());
  for (std::size_t c = 0; c < signal.channels.size(); ++c) {
    const auto &in = signal.channels[c];
    auto &dst = out.channels[c];
    dst.assign(static_cast<std::size_t>(out_len), 0.0f);
    for (const Piece &piece : pieces) {
      const std::int64_t k_lo = std::max<std::int64_t>(piece.k_begin, 0);
      const std::int64_t k_hi = std::min(piece.k_end, out_len);
      const std::int64_t shift = std::llround(piece.b);
      const bool integer_path =
          piece.a == 1.0 &&
          std::abs(piece.b - static_cast<double>(shift)) < 1e-9;
      for (std::int64_t k = k_lo; k < k_hi; ++k) {
        if (integer_path) {
          const std::int64_t p = k + shift;
          dst[static_cast<std::size_t>(k)] =
              (p >= 0 && p < in_len) ? in[static_cast<std::size_t>(p)] : 0.0f;
        } else {
          const double p = piece.a * static_cast<double>(k) + piece.b;
          dst[static_cast<std::size_t>(k)] =
              static_cast<float>(interp.Interpolate(in, p));
        }
      }
    }
  }
  return out;
}

AudioSignal DeleteSamples(const AudioSignal &signal,
                          std::vector<std::pair<std::int64_t, std::int64_t>>
                              spans /* (position, count), sorted */) {
  AudioSignal out;
  out.sample_rate = signal.sample_rate;
  out.channels.resize(signal.channels.size());
  const std::int64_t in_len = signal.NumSamples();
  for (std::size_t c = 0; c < signal.channels.size(); ++c) {
    const auto &in = signal.channels[c];
    auto &dst = out.channels[c];
    std::int64_t src = 0;
    for (const auto &[pos, count] : spans) {
      if (pos < src || pos + count > in_len)
        throw ArgumentError("simulate: drop events overlap or exceed signal");
      dst.insert(dst.end(), in.begin() + src, in.begin() + pos);
      src = pos + count;
    }
    dst.insert(dst.end(), in.begin() + src, in.end());
  }
  return out;
}

}  // namespace

AudioSignal Corrupt(const AudioSignal &signal, const DriftFit &drift,
                    std::span<const DropEvent> drops) {
  signal.Check();
  AudioSignal warped =
      drift.segments.empty() ? signal : ForwardWarp(signal, drift);
  std::vector<std::pair<std::int64_t, std::int64_t>> spans;
  for (const DropEvent &drop : drops) {
    spans.emplace_back(std::llround(drop.time * signal.sample_rate),
                       drop.count);
  }
  std::sort(spans.begin(), spans.end());
  if (spans.empty()) return warped;
  return DeleteSamples(warped, std::move(spans));
}

GeneratedSession GenerateSession(const SessionSpec &spec_in) {
  SessionSpec spec = spec_in;
  if (spec.devices.empty()) {
    for (int i = 0; i < spec.num_devices; ++i) {
      DeviceSimSpec dev;
      dev.id = "U0" + std::to_string(i + 1);
      spec.devices.push_back(dev);
    }
  }
  for (std::size_t i = 0; i < spec.devices.size(); ++i) {
    if (spec.devices[i].id.empty())
      spec.devices[i].id = "U0" + std::to_string(i + 1);
  }
  ValidateSpec(spec);

  const int rate = spec.sample_rate;
  const std::int64_t num_samples = std::llround(spec.duration * rate);
  Rng rng(spec.seed);

  // Utterance schedule. An utterance may overlap the previous one (with a
  // different speaker); otherwise a clear gap follows.
  struct Utt {
    int speaker;
    double start, end;
    std::string words;
  };
  std::vector<Utt> schedule;
  double cursor = rng.Uniform(0.8, 1.5);
  double prev_end = 0.0;
  int prev_speaker = -1;
  while (true) {
    const double len = rng.Uniform(1.0, 2.5);
    if (cursor + len > spec.duration - 0.5) break;
    int speaker = rng.NextInt(spec.num_speakers);
    const bool overlaps_prev = cursor < prev_end;
    if (overlaps_prev && speaker == prev_speaker)
      speaker = (speaker + 1 + rng.NextInt(spec.num_speakers - 1)) %
                spec.num_speakers;
    Utt utt;
    utt.speaker = speaker;
    utt.start = cursor;
    utt.end = cursor + len;
    const int num_words = std::max(1, static_cast<int>(std::lround(len * 2.5)));
    for (int w = 0; w < num_words; ++w) {
      if (w > 0) utt.words += ' ';
      utt.words += 'w' + std::to_string(rng.NextInt(200) + 1);
    }
    schedule.push_back(utt);
    prev_end = utt.end;
    prev_speaker = speaker;
    if (rng.NextDouble() < spec.overlap_ratio) {
      cursor = utt.start + len * rng.Uniform(0.4, 0.8);
    } else {
      cursor = utt.end + rng.Uniform(0.5, 1.2);
    }
  }
  if (schedule.empty())
    throw ArgumentError("simulate: session too short for any utterance");

  // Disjoint bands on a geometric frequency grid. The constant
  // bandwidth-to-center ratio keeps every band's correlation side lobes
  // (one carrier cycle away) well below the main peak, so delay estimation
  // cannot cycle-skip, while the bands stay spectrally separable for the
  // lite diarizer.
  const double f_lo = 300.0;
  const double f_hi = rate / 2.0 - 300.0;
  const double ratio = std::pow(f_hi / f_lo, 1.0 / spec.num_speakers);
  std::vector<std::vector<double>> band_firs;
  for (int s = 0; s < spec.num_speakers; ++s) {
    const double lo = f_lo * std::pow(ratio, s);
    const double hi = lo + 0.82 * (lo * ratio - lo);
    band_firs.push_back(DesignBandpassFir(lo, hi, rate, 255));
  }

  GeneratedSession session;
  session.reference = AudioSignal(rate, 1, num_samples);
  auto &mix = session.reference.channels[0];

  const double ramp = 0.05;  // seconds
  for (const Utt &utt : schedule) {
    const std::int64_t begin = std::llround(utt.start * rate);
    const std::int64_t len = std::llround((utt.end - utt.start) * rate);
    std::vector<float> burst(static_cast<std::size_t>(len));
    for (auto &v : burst) v = static_cast<float>(rng.Gaussian());
    burst = FirFilter(burst, band_firs[static_cast<std::size_t>(utt.speaker)]);
    double rms = 0.0;
    for (const float v : burst) rms += static_cast<double>(v) * v;
    rms = std::sqrt(rms / static_cast<double>(len));
    const double gain = rms > 1e-12 ? 0.1 / rms : 0.0;
    const std::int64_t ramp_len =
        std::min<std::int64_t>(std::llround(ramp * rate), len / 2);
    for (std::int64_t i = 0; i < len; ++i) {
      double env = 1.0;
      if (i < ramp_len)
        env = 0.5 - 0.5 * std::cos(3.14159265358979323846 * i / ramp_len);
      else if (i >= len - ramp_len)
        env = 0.5 -
              0.5 * std::cos(3.14159265358979323846 * (len - 1 - i) / ramp_len);
      mix[static_cast<std::size_t>(begin + i)] +=
          static_cast<float>(burst[static_cast<std::size_t>(i)] * gain * env);
    }
  }
  // Low noise floor so the reference is never digitally silent.
  for (auto &v : mix) v += static_cast<float>(1e-4 * rng.Gaussian());
  for (auto &v : mix) v = std::clamp(v, -0.99f, 0.99f);

  // Ground truth transcript and RTTM share the same segments.
  for (const Utt &utt : schedule) {
    char speaker_name[16];
    std::snprintf(speaker_name, sizeof(speaker_name), "P%02d",
                  utt.speaker + 1);
    session.transcript.push_back(
        {spec.session_id, speaker_name, utt.start, utt.end, utt.words});
    session.rttm.push_back(
        {spec.session_id, utt.start, utt.end - utt.start, speaker_name});
  }

  session.manifest.session_id = spec.session_id;
  for (std::size_t d = 0; d < spec.devices.size(); ++d) {
    const DeviceSimSpec &dev = spec.devices[d];
    Rng dev_rng(DeviceSeed(spec.seed, d));

    const DriftFit truth = BuildTrueDrift(dev, spec.duration);
    AudioSignal device = session.reference;
    for (auto &v : device.channels[0]) v *= 0.8f;  // fixed attenuation
    device = ForwardWarp(device, truth);

    if (dev.snr_db < 150.0) {
      double rms = 0.0;
      for (const float v : device.channels[0])
        rms += static_cast<double>(v) * v;
      rms = std::sqrt(rms / static_cast<double>(device.NumSamples()));
      const double noise_rms = rms * std::pow(10.0, -dev.snr_db / 20.0);
      for (auto &v : device.channels[0])
        v += static_cast<float>(noise_rms * dev_rng.Gaussian());
    }

    // Drops delete from the corrupted stream; the manifest records where
    // the correction must re-insert zeros (corrected == pre-drop timeline).
    std::vector<std::pair<std::int64_t, std::int64_t>> spans;
    for (const DropEvent &drop : dev.drop_events)
      spans.emplace_back(std::llround(drop.time * rate), drop.count);
    std::sort(spans.begin(), spans.end());
    DeviceEdits edits;
    for (const auto &[pos, count] : spans)
      edits.drop_insertions.push_back({pos, count});
    if (!spans.empty()) device = DeleteSamples(device, spans);

    if (dev.drift_breakpoint) {
      const double f1 = 1.0 + dev.drift_slope;
      const std::int64_t break_sample = std::llround(
          (*dev.drift_breakpoint * f1 + dev.delay) * rate);
      edits.speed_segments.push_back({0, break_sample, f1});
      edits.speed_segments.push_back(
          {break_sample, std::nullopt, 1.0 + dev.drift_slope2});
    } else {
      edits.speed_segments.push_back(
          {0, std::nullopt, 1.0 + dev.drift_slope});
    }

    session.manifest.devices.emplace(dev.id, std::move(edits));
    session.true_drift.emplace(dev.id, truth);
    session.devices.emplace(dev.id, std::move(device));
  }
  return session;
}

SessionSpec ParseSessionSpec(const std::string &json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("session spec must be an object");

  SessionSpec spec;
  const auto num = [&](const char *field, double fallback) {
    if (!root.contains(field)) return fallback;
    if (!root[field].is_number())
      throw ParseError(std::string("field '") + field + "' must be a number");
    return root[field].get<double>();
  };
  if (root.contains("session_id")) {
    if (!root["session_id"].is_string())
      throw ParseError("field 'session_id' must be a string");
    spec.session_id = root["session_id"].get<std::string>();
  }
  spec.duration = num("duration", spec.duration);
  spec.num_speakers = static_cast<int>(num("num_speakers", spec.num_speakers));
  spec.num_devices = static_cast<int>(num("num_devices", spec.num_devices));
  spec.overlap_ratio = num("overlap_ratio", spec.overlap_ratio);
  spec.sample_rate = static_cast<int>(num("sample_rate", spec.sample_rate));
  spec.seed = static_cast<std::uint64_t>(num("seed", 1.0));

  if (root.contains("devices")) {
    if (!root["devices"].is_array())
      throw ParseError("field 'devices' must be an array");
    for (const json &d : root["devices"]) {
      if (!d.is_object()) throw ParseError("device entries must be objects");
      DeviceSimSpec dev;
      if (d.contains("id")) dev.id = d["id"].get<std::string>();
      if (d.contains("drift_slope"))
        dev.drift_slope = d["drift_slope"].get<double>();
      if (d.contains("drift_breakpoint") && !d["drift_breakpoint"].is_null())
        dev.drift_breakpoint = d["drift_breakpoint"].get<double>();
      if (d.contains("drift_slope2"))
        dev.drift_slope2 = d["drift_slope2"].get<double>();
      if (d.contains("delay")) dev.delay = d["delay"].get<double>();
      if (d.contains("snr_db")) dev.snr_db = d["snr_db"].get<double>();
      if (d.contains("drop_events")) {
        for (const json &e : d["drop_events"]) {
          dev.drop_events.push_back({e.at("time").get<double>(),
                                     e.at("count").get<std::int64_t>()});
        }
      }
      spec.devices.push_back(std::move(dev));
    }
    if (!spec.devices.empty())
      spec.num_devices = static_cast<int>(spec.devices.size());
  }
  return spec;
}

std::string EmitSessionSpec(const SessionSpec &spec) {
  json devices = json::array();
  for (const DeviceSimSpec &dev : spec.devices) {
    json d = {{"id", dev.id},
              {"drift_slope", dev.drift_slope},
              {"drift_slope2", dev.drift_slope2},
              {"delay", dev.delay},
              {"snr_db", dev.snr_db}};
    if (dev.drift_breakpoint) d["drift_breakpoint"] = *dev.drift_breakpoint;
    json drops = json::array();
    for (const DropEvent &e : dev.drop_events)
      drops.push_back({{"time", e.time}, {"count", e.count}});
    d["drop_events"] = std::move(drops);
    devices.push_back(std::move(d));
  }
  const json root = {{"session_id", spec.session_id},
                     {"duration", spec.duration},
                     {"num_speakers", spec.num_speakers},
                     {"num_devices", spec.num_devices},
                     {"overlap_ratio", spec.overlap_ratio},
                     {"sample_rate", spec.sample_rate},
                     {"seed", spec.seed},
                     {"devices", std::move(devices)}};
  return root.dump(2) + "\n";
}

}  // namespace syncscore
