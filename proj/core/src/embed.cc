// core/src/embed.cc

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

#include "syncscore/embed.h"

#include <algorithm>
#include <cmath>
#include <span>

#include "syncscore/error.h"

namespace syncscore {

namespace {

std::vector<float> SummarizeMfcc(const std::vector<std::vector<float>> &mfcc) {
  const std::size_t dim = mfcc.empty() ? 0 : mfcc[0].size();
  std::vector<float> out(2 * dim, 0.0f);
  if (mfcc.empty()) return out;
  std::vector<double> mean(dim, 0.0), var(dim, 0.0);
  for (const auto &row : mfcc) {
    for (std::size_t d = 0; d < dim; ++d) mean[d] += row[d];
  }
  for (std::size_t d = 0; d < dim; ++d) mean[d] /= static_cast<double>(mfcc.size());
  for (const auto &row : mfcc) {
    for (std::size_t d = 0; d < dim; ++d) {
      const double diff = row[d] - mean[d];
      var[d] += diff * diff;
    }
  }
  double norm = 0.0;
  for (std::size_t d = 0; d < dim; ++d) {
    const double sd = std::sqrt(var[d] / static_cast<double>(mfcc.size()));
    out[d] = static_cast<float>(mean[d]);
    out[dim + d] = static_cast<float>(sd);
    norm += mean[d] * mean[d] + sd * sd;
  }
  norm = std::sqrt(norm);
  if (norm > 1e-12) {
    for (auto &v : out) v = static_cast<float>(v / norm);
  }
  return out;
}

}  // namespace

double CosineDistance(const std::vector<float> &a,
                      const std::vector<float> &b) {
  if (a.size() != b.size() || a.empty())
    throw ArgumentError("CosineDistance: dimension mismatch");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  if (na <= 0.0 || nb <= 0.0) return 1.0;
  return 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
}

std::vector<SegmentEmbedding> EmbedSegments(const AudioSignal &signal,
                                            const IntervalSet &intervals,
                                            const EmbedOptions &opts,
                                            std::vector<std::string> *warnings) {
  signal.Check();
  const AudioSignal mono = MonoDownmix(signal);
  const std::span<const float> samples(mono.channels[0]);
  const int rate = mono.sample_rate;
  const double duration = mono.Duration();

  MfccOptions mfcc_opts;
  mfcc_opts.frame = opts.frame;
  mfcc_opts.num_coeffs = opts.num_mfcc;
  mfcc_opts.include_c0 = false;  // level is not a speaker trait here

  std::vector<SegmentEmbedding> embeddings;
  for (const Interval &iv : intervals) {
    if (iv.begin < -1e-9 || iv.end > duration + 1e-9)
      throw ArgumentError("EmbedSegments: interval outside signal");
    if (iv.Length() < opts.frame.frame_len) {
      if (warnings != nullptr) {
        warnings->push_back("interval [" + std::to_string(iv.begin) + ", " +
                            std::to_string(iv.end) +
                            ") shorter than one frame, skipped");
      }
      continue;
    }
    // Subsegments of `window` seconds every `hop`; a short interval yields
    // one subsegment covering the whole interval.
    std::vector<Interval> subs;
    if (iv.Length() <= opts.window) {
      subs.push_back(iv);
    } else {
      for (double s = iv.begin; s + opts.window <= iv.end + 1e-9;
           s += opts.hop) {
        subs.push_back({s, std::min(s + opts.window, iv.end)});
      }
      if (subs.back().end < iv.end - 1e-9) {
        subs.push_back({iv.end - opts.window, iv.end});
      }
    }
    for (const Interval &sub : subs) {
      const std::int64_t begin =
          static_cast<std::int64_t>(std::llround(sub.begin * rate));
      const std::int64_t end = std::min<std::int64_t>(
          static_cast<std::int64_t>(std::llround(sub.end * rate)),
          mono.NumSamples());
      if (end <= begin) continue;
      const auto mfcc = ComputeMfcc(
          samples.subspan(static_cast<std::size_t>(begin),
                          static_cast<std::size_t>(end - begin)),
          rate, mfcc_opts);
      if (mfcc.empty()) continue;
      SegmentEmbedding emb;
      emb.segment.onset = sub.begin;
      emb.segment.offset = sub.end;
      emb.vector = SummarizeMfcc(mfcc);
      embeddings.push_back(std::move(emb));
    }
  }
  return embeddings;
}

}  // namespace syncscore
