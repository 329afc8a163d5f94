// core/src/features.cc

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

#include "syncscore/features.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "syncscore/dsp.h"
#include "syncscore/error.h"

namespace syncscore {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLogFloor = 1e-10;

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

int FrameCount(std::size_t num_samples, int frame_len, int frame_shift) {
  if (num_samples < static_cast<std::size_t>(frame_len)) return 0;
  return 1 + static_cast<int>((num_samples - frame_len) / frame_shift);
}
}  // namespace

std::vector<std::vector<float>> ComputeMfcc(std::span<const float> samples,
                                            int sample_rate,
                                            const MfccOptions &opts) {
  if (sample_rate <= 0) throw ArgumentError("ComputeMfcc: bad sample rate");
  const int frame_len =
      std::max(1, static_cast<int>(std::lround(opts.frame.frame_len * sample_rate)));
  const int frame_shift =
      std::max(1, static_cast<int>(std::lround(opts.frame.frame_shift * sample_rate)));
  const int num_frames = FrameCount(samples.size(), frame_len, frame_shift);
  const std::size_t fft_size = NextPowerOfTwo(static_cast<std::size_t>(frame_len));
  const int num_bins = static_cast<int>(fft_size) / 2 + 1;

  const double high_freq =
      opts.high_freq > 0.0 ? opts.high_freq : sample_rate / 2.0;
  if (!(opts.low_freq >= 0.0 && opts.low_freq < high_freq &&
        high_freq <= sample_rate / 2.0))
    throw ArgumentError("ComputeMfcc: invalid mel frequency range");
  if (opts.num_coeffs < 1 ||
      opts.num_coeffs + (opts.include_c0 ? 0 : 1) > opts.num_mel_bins)
    throw ArgumentError("ComputeMfcc: num_coeffs must be in [1, num_mel_bins]");

  // Triangular mel filterbank over FFT bins.
  const double mel_lo = HzToMel(opts.low_freq), mel_hi = HzToMel(high_freq);
  std::vector<double> centers(opts.num_mel_bins + 2);
  for (int m = 0; m < opts.num_mel_bins + 2; ++m)
    centers[m] =
        MelToHz(mel_lo + (mel_hi - mel_lo) * m / (opts.num_mel_bins + 1));
  std::vector<std::vector<std::pair<int, double>>> bank(opts.num_mel_bins);
  for (int m = 0; m < opts.num_mel_bins; ++m) {
    for (int k = 0; k < num_bins; ++k) {
      const double freq = static_cast<double>(k) * sample_rate / fft_size;
      double w = 0.0;
      if (freq >= centers[m] && freq <= centers[m + 1] &&
          centers[m + 1] > centers[m]) {
        w = (freq - centers[m]) / (centers[m + 1] - centers[m]);
      } else if (freq > centers[m + 1] && freq <= centers[m + 2] &&
                 centers[m + 2] > centers[m + 1]) {
        w = (centers[m + 2] - freq) / (centers[m + 2] - centers[m + 1]);
      }
      if (w > 0.0) bank[m].emplace_back(k, w);
    }
  }

  std::vector<double> window(frame_len);
  for (int i = 0; i < frame_len; ++i)
    window[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * i / (frame_len - 1));

  std::vector<std::vector<float>> mfcc(
      num_frames, std::vector<float>(opts.num_coeffs));
  std::vector<std::complex<double>> spectrum(fft_size);
  std::vector<double> mel_energy(opts.num_mel_bins);
  for (int f = 0; f < num_frames; ++f) {
    const std::size_t off = static_cast<std::size_t>(f) * frame_shift;
    std::fill(spectrum.begin(), spectrum.end(), std::complex<double>(0.0));
    for (int i = 0; i < frame_len; ++i) {
      const double cur = samples[off + i];
      const double prev = (off + i) > 0 ? samples[off + i - 1] : cur;
      spectrum[i] = (cur - 0.97 * prev) * window[i];
    }
    Fft(&spectrum, false);
    for (int m = 0; m < opts.num_mel_bins; ++m) {
      double e = 0.0;
      for (const auto &[k, w] : bank[m]) e += w * std::norm(spectrum[k]);
      mel_energy[m] = std::log(std::max(e, kLogFloor));
    }
    const int first = opts.include_c0 ? 0 : 1;
    for (int i = 0; i < opts.num_coeffs; ++i) {
      const int c = first + i;
      double acc = 0.0;
      for (int m = 0; m < opts.num_mel_bins; ++m)
        acc += mel_energy[m] *
               std::cos(kPi * c * (m + 0.5) / opts.num_mel_bins);
      const double scale =
          std::sqrt((c == 0 ? 1.0 : 2.0) / opts.num_mel_bins);
      mfcc[f][i] = static_cast<float>(acc * scale);
    }
  }
  return mfcc;
}

std::vector<float> FrameLogEnergy(std::span<const float> samples,
                                  int sample_rate, const FrameSpec &spec) {
  if (sample_rate <= 0) throw ArgumentError("FrameLogEnergy: bad sample rate");
  const int frame_len =
      std::max(1, static_cast<int>(std::lround(spec.frame_len * sample_rate)));
  const int frame_shift =
      std::max(1, static_cast<int>(std::lround(spec.frame_shift * sample_rate)));
  const int num_frames = FrameCount(samples.size(), frame_len, frame_shift);
  std::vector<float> energy(num_frames);
  for (int f = 0; f < num_frames; ++f) {
    const std::size_t off = static_cast<std::size_t>(f) * frame_shift;
    double acc = 0.0;
    for (int i = 0; i < frame_len; ++i) {
      const double v = samples[off + i];
      acc += v * v;
    }
    energy[f] = static_cast<float>(std::log(acc / frame_len + kLogFloor));
  }
  return energy;
}

}  // namespace syncscore
