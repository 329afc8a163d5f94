// core/src/sync.cc

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

#include "syncscore/sync.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "syncscore/dsp.h"
#include "syncscore/error.h"

namespace syncscore {

DriftFit DriftFit::Identity() {
  DriftFit fit;
  fit.segments.push_back(
      {0.0, std::numeric_limits<double>::infinity(), 0.0, 0.0});
  return fit;
}

const DriftSegment &DriftFit::SegmentAt(double t) const {
  if (segments.empty()) throw ArgumentError("DriftFit: no segments");
  for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
    if (t < segments[i].t_end) return segments[i];
  }
  return segments.back();
}

AudioSignal InsertDroppedSamples(const AudioSignal &signal,
                                 std::span<const DropInsertion> insertions) {
  signal.Check();
  const std::int64_t in_len = signal.NumSamples();
  std::int64_t total_inserted = 0;
  std::int64_t prev = -1;
  for (const DropInsertion &ins : insertions) {
    if (ins.count <= 0)
      throw ArgumentError("InsertDroppedSamples: counts must be > 0");
    if (ins.position < prev)
      throw ArgumentError("InsertDroppedSamples: positions must be sorted");
    prev = ins.position;
    total_inserted += ins.count;
  }

  AudioSignal out;
  out.sample_rate = signal.sample_rate;
  out.channels.resize(signal.channels.size());
  for (std::size_t c = 0; c < signal.channels.size(); ++c) {
    const auto &in = signal.channels[c];
    auto &dst = out.channels[c];
    dst.resize(static_cast<std::size_t>(in_len + total_inserted));
    std::int64_t out_idx = 0, in_idx = 0;
    for (const DropInsertion &ins : insertions) {
      const std::int64_t run = ins.position - out_idx;
      if (run < 0 || in_idx + run > in_len)
        throw ArgumentError(
            "InsertDroppedSamples: position beyond output timeline");
      std::copy_n(in.begin() + in_idx, run, dst.begin() + out_idx);
      in_idx += run;
      out_idx += run;
      std::fill_n(dst.begin() + out_idx, ins.count, 0.0f);
      out_idx += ins.count;
    }
    std::copy_n(in.begin() + in_idx, in_len - in_idx, dst.begin() + out_idx);
  }
  return out;
}

DelayTrack EstimateDelayTrack(const AudioSignal &device,
                              const AudioSignal &reference,
                              const DelayEstimationOptions &opts) {
  device.Check();
  reference.Check();
  if (device.sample_rate != reference.sample_rate)
    throw ArgumentError(
        "EstimateDelayTrack: sample rates differ (resample first)");
  if (opts.window_len < 1.0)
    throw ArgumentError("EstimateDelayTrack: window_len must be >= 1 s");
  if (opts.interval <= 0.0 || opts.max_lag <= 0.0)
    throw ArgumentError("EstimateDelayTrack: interval and max_lag must be > 0");

  const AudioSignal dev = MonoDownmix(device);
  const AudioSignal ref = MonoDownmix(reference);
  const int rate = ref.sample_rate;
  const std::int64_t win = std::llround(opts.window_len * rate);
  const std::int64_t lag = std::llround(opts.max_lag * rate);
  const std::int64_t step = std::max<std::int64_t>(1, std::llround(opts.interval * rate));

  DelayTrack track;
  track.window_len = opts.window_len;
  // Reference window [sr, sr + win); device search span widened by the lag
  // on both sides. Only positions where both are full windows produce
  // points.
  const std::int64_t sr_min = lag;
  const std::int64_t sr_max =
      std::min<std::int64_t>(ref.NumSamples() - win,
                             dev.NumSamples() - win - lag);
  if (sr_max < sr_min) return track;

  const auto &ref_samples = ref.channels[0];
  const auto &dev_samples = dev.channels[0];
  std::vector<float> ref_win(static_cast<std::size_t>(win));
  std::vector<float> dev_win(static_cast<std::size_t>(win + 2 * lag));

  for (std::int64_t sr = sr_min; sr <= sr_max; sr += step) {
    double ref_mean = 0.0, dev_mean = 0.0;
    for (std::int64_t j = 0; j < win; ++j)
      ref_mean += ref_samples[static_cast<std::size_t>(sr + j)];
    ref_mean /= static_cast<double>(win);
    for (std::int64_t j = 0; j < win + 2 * lag; ++j)
      dev_mean += dev_samples[static_cast<std::size_t>(sr - lag + j)];
    dev_mean /= static_cast<double>(win + 2 * lag);
    for (std::int64_t j = 0; j < win; ++j)
      ref_win[static_cast<std::size_t>(j)] = static_cast<float>(
          ref_samples[static_cast<std::size_t>(sr + j)] - ref_mean);
    for (std::int64_t j = 0; j < win + 2 * lag; ++j)
      dev_win[static_cast<std::size_t>(j)] = static_cast<float>(
          dev_samples[static_cast<std::size_t>(sr - lag + j)] - dev_mean);

    const std::vector<double> corr = CrossCorrelate(
        dev_win, ref_win, static_cast<int>(lag), opts.phat_weighting);
    std::size_t peak = 0;
    for (std::size_t m = 1; m < corr.size(); ++m) {
      if (corr[m] > corr[peak]) peak = m;
    }
    // Sub-sample refinement: 3-point parabola through the apex.
    double frac = 0.0;
    if (peak > 0 && peak + 1 < corr.size()) {
      const double denom =
          corr[peak - 1] - 2.0 * corr[peak] + corr[peak + 1];
      if (denom < -1e-12) {
        frac = 0.5 * (corr[peak - 1] - corr[peak + 1]) / denom;
        frac = std::clamp(frac, -0.5, 0.5);
      }
    }
    const double delay_samples =
        static_cast<double>(peak) + frac - static_cast<double>(lag);

    double confidence;
    if (opts.phat_weighting) {
      confidence = std::clamp(corr[peak], 0.0, 1.0);
    } else {
      double ref_energy = 0.0, dev_energy = 0.0;
      for (std::int64_t j = 0; j < win; ++j) {
        const double r = ref_win[static_cast<std::size_t>(j)];
        const double d = dev_win[static_cast<std::size_t>(peak + j)];
        ref_energy += r * r;
        dev_energy += d * d;
      }
      const double denom = std::sqrt(ref_energy * dev_energy);
      confidence =
          denom > 1e-12 ? std::clamp(corr[peak] / denom, 0.0, 1.0) : 0.0;
    }

    DelayPoint point;
    point.time = static_cast<double>(sr + win / 2) / rate;
    point.delay = delay_samples / rate;
    point.confidence = confidence;
    track.points.push_back(point);
  }
  return track;
}

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double sse = 0.0;
};

LineFit FitLine(std::span<const DelayPoint> points) {
  const std::size_t n = points.size();
  double mean_t = 0.0, mean_d = 0.0;
  for (const DelayPoint &p : points) {
    mean_t += p.time;
    mean_d += p.delay;
  }
  mean_t /= static_cast<double>(n);
  mean_d /= static_cast<double>(n);
  double stt = 0.0, std_ = 0.0;
  for (const DelayPoint &p : points) {
    stt += (p.time - mean_t) * (p.time - mean_t);
    std_ += (p.time - mean_t) * (p.delay - mean_d);
  }
  if (stt <= 0.0)
    throw Error("fit error: delay points have no time spread");
  LineFit fit;
  fit.slope = std_ / stt;
  fit.intercept = mean_d - fit.slope * mean_t;
  for (const DelayPoint &p : points) {
    const double r = p.delay - (fit.slope * p.time + fit.intercept);
    fit.sse += r * r;
  }
  return fit;
}

// Recursive 1-breakpoint splits, each accepted only when it improves the
// side's SSE by min_improvement.
void FitPiecewise(std::span<const DelayPoint> points, int budget,
                  double min_improvement, std::vector<DriftSegment> *out,
                  double *total_sse) {
  const LineFit linear = FitLine(points);
  const std::size_t n = points.size();
  if (budget > 0 && n >= 4) {
    double best_sse = linear.sse;
    std::size_t best_split = 0;
    for (std::size_t b = 2; b + 2 <= n; ++b) {
      const LineFit left = FitLine(points.subspan(0, b));
      const LineFit right = FitLine(points.subspan(b));
      if (left.sse + right.sse < best_sse) {
        best_sse = left.sse + right.sse;
        best_split = b;
      }
    }
    if (best_split != 0 && best_sse <= (1.0 - min_improvement) * linear.sse) {
      FitPiecewise(points.subspan(0, best_split), budget - 1, min_improvement,
                   out, total_sse);
      const double t_break =
          (points[best_split - 1].time + points[best_split].time) / 2.0;
      out->back().t_end = t_break;
      const std::size_t right_first = out->size();
      FitPiecewise(points.subspan(best_split), budget - 1, min_improvement,
                   out, total_sse);
      (*out)[right_first].t_start = t_break;
      return;
    }
  }
  out->push_back({points.front().time, points.back().time, linear.slope,
                  linear.intercept});
  *total_sse += linear.sse;
}

}  // namespace

namespace {
// Slopes below one sample per ~17 hours are estimation noise on drift-free
// material; zeroing them keeps the bit-exact shift path reachable and
// makes iterated fits idempotent.
void SnapSlopes(DriftFit *fit) {
  for (DriftSegment &seg : fit->segments) {
    if (std::abs(seg.slope) < 1e-9) seg.slope = 0.0;
  }
}
}  // namespace

DriftFit FitDrift(const DelayTrack &track, const FitOptions &opts) {
  std::vector<DelayPoint> points;
  for (const DelayPoint &p : track.points) {
    if (p.confidence >= opts.min_confidence) points.push_back(p);
  }
  std::sort(points.begin(), points.end(),
            [](const DelayPoint &a, const DelayPoint &b) {
              return a.time < b.time;
            });

  DriftFit fit;
  double sse = 0.0;
  if (opts.piecewise) {
    if (points.size() < 4)
      throw Error("fit error: piecewise fit needs at least 4 confident "
                  "delay points, got " +
                  std::to_string(points.size()));
    FitPiecewise(points, std::max(1, opts.max_breakpoints),
                 opts.min_improvement, &fit.segments, &sse);
  } else {
    if (points.size() < 2)
      throw Error("fit error: linear fit needs at least 2 confident delay "
                  "points, got " +
                  std::to_string(points.size()));
    const LineFit linear = FitLine(points);
    fit.segments.push_back({points.front().time, points.back().time,
                            linear.slope, linear.intercept});
    sse = linear.sse;
  }
  fit.residual_rms = std::sqrt(sse / static_cast<double>(points.size()));
  SnapSlopes(&fit);
  return fit;
}

namespace {

// Per-segment affine map from output sample index to input position:
// input_pos = a * k + b for output k in [k_begin, k_end).
struct AffinePiece {
  std::int64_t k_begin = 0;
  std::int64_t k_end = 0;
  double a = 1.0;
  double b = 0.0;
};

AudioSignal WarpSignal(const AudioSignal &signal,
                       const std::vector<AffinePiece> &pieces) {
  static const SincInterpolator interp;
  const std::int64_t in_len = signal.NumSamples();

  // Output length: first k where the input position runs off the signal.
  std::int64_t out_len = 0;
  for (const AffinePiece &piece : pieces) {
    const std::int64_t k_stop =
        piece.a > 0.0
            ? static_cast<std::int64_t>(
                  std::ceil((static_cast<double>(in_len) - piece.b) / piece.a))
            : piece.k_end;
    out_len = std::clamp(k_stop, piece.k_begin, piece.k_end);
    if (out_len < piece.k_end) break;
  }

  AudioSignal out;
  out.sample_rate = signal.sample_rate;
  out.channels.resize(signal.channels.size());
  for (std::size_t c = 0; c < signal.channels.size(); ++c) {
    const auto &in = signal.channels[c];
    auto &dst = out.channels[c];
    dst.assign(static_cast<std::size_t>(out_len), 0.0f);
    for (const AffinePiece &piece : pieces) {
      const std::int64_t k_lo = std::max<std::int64_t>(piece.k_begin, 0);
      const std::int64_t k_hi = std::min(piece.k_end, out_len);
      if (k_hi <= k_lo) continue;
      const std::int64_t shift = std::llround(piece.b);
      const bool integer_path =
          piece.a == 1.0 && std::abs(piece.b - static_cast<double>(shift)) < 1e-9;
      if (integer_path) {
        for (std::int64_t k = k_lo; k < k_hi; ++k) {
          const std::int64_t p = k + shift;
          dst[static_cast<std::size_t>(k)] =
              (p >= 0 && p < in_len) ? in[static_cast<std::size_t>(p)] : 0.0f;
        }
      } else {
        for (std::int64_t k = k_lo; k < k_hi; ++k) {
          const double p = piece.a * static_cast<double>(k) + piece.b;
          dst[static_cast<std::size_t>(k)] =
              static_cast<float>(interp.Interpolate(in, p));
        }
      }
    }
  }
  return out;
}

}  // namespace

AudioSignal ApplySpeed(const AudioSignal &signal, const DriftFit &fit) {
  signal.Check();
  if (fit.segments.empty()) throw ArgumentError("ApplySpeed: empty fit");
  for (const DriftSegment &seg : fit.segments) {
    if (!(std::abs(seg.slope) < 0.01))
      throw ArgumentError(
          "ApplySpeed: fitted slope outside (-0.01, 0.01); degenerate fit");
  }
  const int rate = signal.sample_rate;
  std::vector<AffinePiece> pieces;
  for (std::size_t i = 0; i < fit.segments.size(); ++i) {
    const DriftSegment &seg = fit.segments[i];
    AffinePiece piece;
    piece.k_begin =
        i == 0 ? 0 : std::llround(seg.t_start * rate);
    piece.k_end = i + 1 == fit.segments.size()
                      ? std::numeric_limits<std::int64_t>::max()
                      : std::llround(seg.t_end * rate);
    piece.a = 1.0 + seg.slope;
    piece.b = seg.intercept * rate;
    // Estimation noise on drift-free material fits slopes around 1e-10 and
    // shifts around 1e-4 samples. Snap those to the integer-shift path so
    // drift-free devices pass through bit-exact; the snap is two orders
    // below the one-sample residual tolerance.
    if (std::abs(seg.slope) < 1e-9) piece.a = 1.0;
    if (std::abs(piece.b - std::llround(piece.b)) < 0.01)
      piece.b = static_cast<double>(std::llround(piece.b));
    pieces.push_back(piece);
  }
  return WarpSignal(signal, pieces);
}

namespace {

struct DeviceSync {
  AudioSignal corrected;
  DriftFit fit;
  DelayTrack track;
};

std::size_t CountConfident(const DelayTrack &track, double min_confidence) {
  std::size_t confident = 0;
  for (const DelayPoint &p : track.points) {
    if (p.confidence >= min_confidence) ++confident;
  }
  return confident;
}

// Refines a first-pass fit with residual delays measured on the corrected
// signal. Fast drift smears the correlation peaks of the first pass (the
// content moves within the window), which biases its slopes; the corrected
// signal is drift-free, so the residual line fit per segment is sharp. The
// composition reads the device at p1(p2(k)), i.e. slope s1+s2+s1*s2 and
// intercept c2*(1+s1) + c1 within each first-pass segment.
DriftFit ComposeRefinement(const DriftFit &first, const DelayTrack &residual,
                           double min_confidence) {
  std::vector<DelayPoint> points;
  for (const DelayPoint &p : residual.points) {
    if (p.confidence >= min_confidence) points.push_back(p);
  }
  std::sort(points.begin(), points.end(),
            [](const DelayPoint &a, const DelayPoint &b) {
              return a.time < b.time;
            });

  DriftFit out;
  double sse = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < first.segments.size(); ++i) {
    const DriftSegment &seg = first.segments[i];
    std::vector<DelayPoint> inside;
    for (const DelayPoint &p : points) {
      const bool after_start = i == 0 || p.time >= seg.t_start;
      const bool before_end =
          i + 1 == first.segments.size() || p.time < seg.t_end;
      if (after_start && before_end) inside.push_back(p);
    }
    DriftSegment refined = seg;
    bool distinct_times = inside.size() >= 2;
    if (distinct_times && inside.front().time == inside.back().time)
      distinct_times = false;
    if (distinct_times) {
      const LineFit line = FitLine(inside);
      refined.slope = seg.slope + line.slope + seg.slope * line.slope;
      refined.intercept = line.intercept * (1.0 + seg.slope) + seg.intercept;
      sse += line.sse;
      used += inside.size();
    }
    out.segments.push_back(refined);
  }
  out.residual_rms =
      used > 0 ? std::sqrt(sse / static_cast<double>(used)) : first.residual_rms;
  SnapSlopes(&out);
  return out;
}

DeviceSync SyncOneDevice(const AudioSignal &signal, const DeviceEdits &edits,
                         const AudioSignal &reference,
                         const SyncOptions &opts) {
  DeviceSync out;
  const AudioSignal inserted =
      InsertDroppedSamples(signal, edits.drop_insertions);
  out.track = EstimateDelayTrack(inserted, reference, opts.delay);
  const std::size_t needed = opts.fit.piecewise ? 4 : 2;
  if (CountConfident(out.track, opts.fit.min_confidence) >= needed) {
    out.fit = FitDrift(out.track, opts.fit);
    // Second pass: measure the residual on the corrected signal and fold
    // it into the fit (segment boundaries stay where the first pass put
    // them).
    const AudioSignal first_pass = ApplySpeed(inserted, out.fit);
    const DelayTrack residual =
        EstimateDelayTrack(first_pass, reference, opts.delay);
    if (CountConfident(residual, opts.fit.min_confidence) >= 2) {
      out.fit = ComposeRefinement(out.fit, residual, opts.fit.min_confidence);
    }
  } else {
    out.fit = DriftFit::Identity();  // too short/quiet to estimate drift
  }
  out.corrected = ApplySpeed(inserted, out.fit);
  return out;
}

}  // namespace

SyncResult SynchronizeSession(const std::map<std::string, AudioSignal> &devices,
                              const AudioSignal &reference,
                              const EditsManifest &manifest,
                              const SyncOptions &opts) {
  reference.Check();
  std::vector<std::pair<std::string, const AudioSignal *>> todo;
  for (const auto &[device_id, signal] : devices) {
    if (!manifest.devices.count(device_id))
      throw ConfigError("no manifest entry for device " + device_id);
    todo.emplace_back(device_id, &signal);
  }

  SyncResult result;
  const auto run = [&](std::size_t i) {
    const auto &[device_id, signal] = todo[i];
    return SyncOneDevice(*signal, manifest.devices.at(device_id), reference,
                         opts);
  };
  if (opts.jobs > 1 && todo.size() > 1) {
    std::vector<std::future<DeviceSync>> futures;
    futures.reserve(todo.size());
    for (std::size_t i = 0; i < todo.size(); ++i)
      futures.push_back(std::async(std::launch::async, run, i));
    for (std::size_t i = 0; i < todo.size(); ++i) {
      DeviceSync sync = futures[i].get();
      result.devices.emplace(todo[i].first, std::move(sync.corrected));
      result.fits.emplace(todo[i].first, std::move(sync.fit));
      result.tracks.emplace(todo[i].first, std::move(sync.track));
    }
  } else {
    for (std::size_t i = 0; i < todo.size(); ++i) {
      DeviceSync sync = run(i);
      result.devices.emplace(todo[i].first, std::move(sync.corrected));
      result.fits.emplace(todo[i].first, std::move(sync.fit));
      result.tracks.emplace(todo[i].first, std::move(sync.track));
    }
  }

  std::int64_t min_len = reference.NumSamples();
  for (const auto &[device_id, signal] : result.devices)
    min_len = std::min(min_len, signal.NumSamples());
  for (auto &[device_id, signal] : result.devices) Truncate(&signal, min_len);
  return result;
}

double UnifiedTimeToDevice(const DriftFit &fit, double unified_time) {
  const DriftSegment &seg = fit.SegmentAt(unified_time);
  return unified_time * (1.0 + seg.slope) + seg.intercept;
}

double DeviceTimeToUnified(const DriftFit &fit, double device_time) {
  if (fit.segments.empty()) throw ArgumentError("DriftFit: no segments");
  for (std::size_t i = 0; i < fit.segments.size(); ++i) {
    const DriftSegment &seg = fit.segments[i];
    const double t = (device_time - seg.intercept) / (1.0 + seg.slope);
    if (i + 1 == fit.segments.size() || t < seg.t_end) return t;
  }
  return 0.0;  // unreachable
}

std::vector<TranscriptUtterance> AdjustTranscriptTimes(
    const std::vector<TranscriptUtterance> &utterances, const DriftFit &fit) {
  std::vector<TranscriptUtterance> out = utterances;
  for (TranscriptUtterance &u : out) {
    u.start_time = DeviceTimeToUnified(fit, u.start_time);
    u.end_time = DeviceTimeToUnified(fit, u.end_time);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TranscriptUtterance &a,
                      const TranscriptUtterance &b) {
                     return a.start_time < b.start_time;
                   });
  return out;
}

}  // namespace syncscore
