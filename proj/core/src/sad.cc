// core/src/sad.cc

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

#include "syncscore/sad.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "syncscore/error.h"

namespace syncscore {

std::vector<Interval> SadDecode(const FramePosteriors &posteriors,
                                const SadOptions &opts) {
  if (!(posteriors.frame_shift > 0.0))
    throw ArgumentError("SadDecode: frame_shift must be positive");
  const std::size_t num_frames = posteriors.speech_logits.size();
  if (num_frames == 0) return {};

  const int num_sil = std::max<int>(
      1, static_cast<int>(std::lround(opts.min_silence / posteriors.frame_shift)));
  const int num_sp = std::max<int>(
      1, static_cast<int>(std::lround(opts.min_speech / posteriors.frame_shift)));
  // States 0..num_sil-1: silence chain; num_sil..num_sil+num_sp-1: speech
  // chain. A chain must be traversed front to back, which enforces the
  // minimum durations; only the last state of each chain self-loops.
  const int num_states = num_sil + num_sp;
  const int sil_last = num_sil - 1;
  const int sp_first = num_sil;
  const int sp_last = num_states - 1;
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  std::vector<double> prev(num_states, kNegInf), cur(num_states, kNegInf);
  std::vector<std::int16_t> back(num_frames * static_cast<std::size_t>(num_states), -1);

  const auto emission = [&](int state, std::size_t t) -> double {
    return state >= sp_first ? posteriors.speech_logits[t] : 0.0;
  };

  // Leading silence may be partial (start anywhere in the silence chain);
  // speech must start at the head of its chain.
  for (int s = 0; s < num_sil; ++s) prev[s] = emission(s, 0);
  prev[sp_first] = emission(sp_first, 0);

  for (std::size_t t = 1; t < num_frames; ++t) {
    std::int16_t *bp = &back[t * static_cast<std::size_t>(num_states)];
    for (int s = 0; s < num_states; ++s) {
      // Predecessor candidates in fixed order; strict improvement keeps the
      // first, so silence wins score ties.
      double best = kNegInf;
      int best_from = -1;
      const auto consider = [&](int from) {
        if (from >= 0 && prev[from] > best) {
          best = prev[from];
          best_from = from;
        }
      };
      if (s < num_sil) {
        if (s == 0) consider(sp_last);        // speech completed -> silence
        if (s > 0) consider(s - 1);           // forced advance
        if (s == sil_last && num_sil > 1) consider(sil_last);  // dwell
        if (num_sil == 1) consider(sil_last);                  // dwell
      } else {
        if (s == sp_first) consider(sil_last);  // silence completed -> speech
        if (s > sp_first) consider(s - 1);
        if (s == sp_last) consider(sp_last);
      }
      cur[s] = best_from < 0 ? kNegInf : best + emission(s, t);
      bp[s] = static_cast<std::int16_t>(best_from);
    }
    std::swap(prev, cur);
  }

  // Valid final states: any silence state (trailing silence may be partial)
  // or the completed speech chain.
  int best_final = -1;
  double best_score = kNegInf;
  for (int s = 0; s <= sil_last; ++s) {
    if (prev[s] > best_score) {
      best_score = prev[s];
      best_final = s;
    }
  }
  if (prev[sp_last] > best_score) {
    best_score = prev[sp_last];
    best_final = sp_last;
  }
  if (best_final < 0) return {};

  std::vector<char> is_speech(num_frames);
  int state = best_final;
  for (std::size_t t = num_frames; t-- > 0;) {
    is_speech[t] = state >= sp_first;
    if (t > 0) state = back[t * static_cast<std::size_t>(num_states) + state];
  }

  std::vector<Interval> intervals;
  for (std::size_t t = 0; t < num_frames;) {
    if (!is_speech[t]) {
      ++t;
      continue;
    }
    std::size_t end = t;
    while (end < num_frames && is_speech[end]) ++end;
    intervals.push_back({static_cast<double>(t) * posteriors.frame_shift,
                         static_cast<double>(end) * posteriors.frame_shift});
    t = end;
  }
  return intervals;
}

FramePosteriors EnergySadFrontend(const AudioSignal &signal,
                                  const FrameSpec &frame) {
  const AudioSignal mono = MonoDownmix(signal);
  FramePosteriors post;
  post.frame_shift = frame.frame_shift;
  const std::vector<float> energy =
      FrameLogEnergy(mono.channels[0], mono.sample_rate, frame);
  if (energy.empty()) return post;

  std::vector<float> sorted = energy;
  std::sort(sorted.begin(), sorted.end());
  const auto pct = [&](double q) {
    const std::size_t idx = static_cast<std::size_t>(
        std::min<double>(sorted.size() - 1, q * (sorted.size() - 1)));
    return static_cast<double>(sorted[idx]);
  };
  const double p10 = pct(0.10), p90 = pct(0.90);
  const double spread = p90 - p10;

  double threshold, scale;
  if (spread >= 2.0) {
    threshold = (p10 + p90) / 2.0;
    scale = 8.0 / spread;
  } else {
    // Degenerate dynamic range (all-speech or all-silence material): fall
    // back to an absolute floor; digital silence sits near log(1e-10).
    threshold = -15.0;
    scale = 2.0;
  }
  post.speech_logits.resize(energy.size());
  for (std::size_t t = 0; t < energy.size(); ++t) {
    const double logit =
        std::clamp(scale * (energy[t] - threshold), -20.0, 20.0);
    post.speech_logits[t] = static_cast<float>(logit);
  }
  return post;
}

}  // namespace syncscore
