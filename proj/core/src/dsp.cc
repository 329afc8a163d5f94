// core/src/dsp.cc

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

#include "syncscore/dsp.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "syncscore/error.h"

namespace syncscore {

namespace {
constexpr double kPi = std::numbers::pi;

double Sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  return std::sin(kPi * x) / (kPi * x);
}
}  // namespace

void Fft(std::vector<std::complex<double>> *data, bool inverse) {
  auto &x = *data;
  const std::size_t n = x.size();
  if (n == 0) return;
  if ((n & (n - 1)) != 0)
    throw ArgumentError("Fft: size must be a power of two");

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = x[i + k];
        const std::complex<double> v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto &v : x) v *= scale;
  }
}

std::size_t NextPowerOfTwo(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

double BesselI0(double x) {
  // Power series; converges quickly for the argument range of Kaiser betas.
  double sum = 1.0, term = 1.0;
  const double half_x = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < sum * 1e-16) break;
  }
  return sum;
}

std::vector<double> KaiserWindow(int length, double beta) {
  if (length < 1) throw ArgumentError("KaiserWindow: length must be >= 1");
  std::vector<double> w(length);
  const double denom = BesselI0(beta);
  const double half = (length - 1) / 2.0;
  for (int n = 0; n < length; ++n) {
    const double r = half > 0 ? (n - half) / half : 0.0;
    w[n] = BesselI0(beta * std::sqrt(std::max(0.0, 1.0 - r * r))) / denom;
  }
  return w;
}

SincInterpolator::SincInterpolator(int num_taps, double beta, double cutoff)
    : num_taps_(num_taps), num_phases_(512) {
  if (num_taps < 4 || num_taps % 2 != 0)
    throw ArgumentError("SincInterpolator: num_taps must be even and >= 4");
  if (cutoff <= 0.0 || cutoff > 1.0)
    throw ArgumentError("SincInterpolator: cutoff must be in (0, 1]");
  table_.resize(static_cast<std::size_t>(num_phases_ + 1) * num_taps_);
  const double half_width = num_taps_ / 2.0;
  const double i0_beta = BesselI0(beta);
  for (int p = 0; p <= num_phases_; ++p) {
    const double frac = static_cast<double>(p) / num_phases_;
    double *row = &table_[static_cast<std::size_t>(p) * num_taps_];
    double sum = 0.0;
    for (int k = 0; k < num_taps_; ++k) {
      // Tap k multiplies x[floor(pos) - num_taps/2 + 1 + k]; t is that
      // sample's offset from the evaluation point.
      const double t = k - (num_taps_ / 2 - 1) - frac;
      const double u = t / half_width;
      const double win =
          u <= -1.0 || u >= 1.0
              ? 0.0
              : BesselI0(beta * std::sqrt(1.0 - u * u)) / i0_beta;
      row[k] = cutoff * Sinc(cutoff * t) * win;
      sum += row[k];
    }
    // Unity DC gain per phase keeps constant signals exact.
    if (sum != 0.0) {
      for (int k = 0; k < num_taps_; ++k) row[k] /= sum;
    }
  }
}

double SincInterpolator::Interpolate(std::span<const float> x,
                                     double pos) const {
  const double floor_pos = std::floor(pos);
  const double frac = pos - floor_pos;
  const std::int64_t base =
      static_cast<std::int64_t>(floor_pos) - (num_taps_ / 2 - 1);
  const double phase_pos = frac * num_phases_;
  const int p0 = std::min(static_cast<int>(phase_pos), num_phases_ - 1);
  const double blend = phase_pos - p0;
  const double *row0 = &table_[static_cast<std::size_t>(p0) * num_taps_];
  const double *row1 = row0 + num_taps_;

  const std::int64_t len = static_cast<std::int64_t>(x.size());
  const int k_lo = static_cast<int>(std::max<std::int64_t>(0, -base));
  const int k_hi =
      static_cast<int>(std::min<std::int64_t>(num_taps_, len - base));
  double acc = 0.0;
  for (int k = k_lo; k < k_hi; ++k) {
    const double tap = row0[k] + blend * (row1[k] - row0[k]);
    acc += tap * x[static_cast<std::size_t>(base + k)];
  }
  return acc;
}

std::vector<double> DesignBandpassFir(double low_hz, double high_hz,
                                      int sample_rate, int num_taps) {
  if (num_taps < 3 || num_taps % 2 == 0)
    throw ArgumentError("DesignBandpassFir: num_taps must be odd and >= 3");
  if (!(0.0 <= low_hz && low_hz < high_hz && high_hz <= sample_rate / 2.0))
    throw ArgumentError("DesignBandpassFir: invalid band edges");
  const double f1 = low_hz / sample_rate;
  const double f2 = high_hz / sample_rate;
  const int mid = (num_taps - 1) / 2;
  std::vector<double> h(num_taps);
  for (int n = 0; n < num_taps; ++n) {
    const int m = n - mid;
    h[n] = 2.0 * f2 * Sinc(2.0 * f2 * m) - 2.0 * f1 * Sinc(2.0 * f1 * m);
    h[n] *= 0.54 - 0.46 * std::cos(2.0 * kPi * n / (num_taps - 1));  // Hamming
  }
  // Normalize gain at band center to 1.
  const double fc = (f1 + f2) / 2.0;
  double re = 0.0, im = 0.0;
  for (int n = 0; n < num_taps; ++n) {
    re += h[n] * std::cos(2.0 * kPi * fc * n);
    im -= h[n] * std::sin(2.0 * kPi * fc * n);
  }
  const double gain = std::hypot(re, im);
  if (gain > 1e-12) {
    for (auto &v : h) v /= gain;
  }
  return h;
}

std::vector<float> FirFilter(std::span<const float> x,
                             std::span<const double> taps) {
  const std::int64_t len = static_cast<std::int64_t>(x.size());
  const std::int64_t nt = static_cast<std::int64_t>(taps.size());
  const std::int64_t delay = (nt - 1) / 2;
  std::vector<float> y(static_cast<std::size_t>(len));
  for (std::int64_t n = 0; n < len; ++n) {
    double acc = 0.0;
    const std::int64_t src_hi = n + delay;
    const std::int64_t k_lo = std::max<std::int64_t>(0, src_hi - len + 1);
    const std::int64_t k_hi = std::min(nt, src_hi + 1);
    for (std::int64_t k = k_lo; k < k_hi; ++k) {
      acc += taps[static_cast<std::size_t>(k)] *
             x[static_cast<std::size_t>(src_hi - k)];
    }
    y[static_cast<std::size_t>(n)] = static_cast<float>(acc);
  }
  return y;
}

std::vector<double> CrossCorrelate(std::span<const float> device,
                                   std::span<const float> reference,
                                   int max_lag, bool phat_weighting) {
  if (max_lag < 0) throw ArgumentError("CrossCorrelate: negative max_lag");
  if (device.size() != reference.size() + 2 * static_cast<std::size_t>(max_lag))
    throw ArgumentError(
        "CrossCorrelate: device span must be reference size + 2 * max_lag");
  const std::size_t n = NextPowerOfTwo(device.size());
  std::vector<std::complex<double>> d(n), r(n);
  for (std::size_t i = 0; i < device.size(); ++i) d[i] = device[i];
  for (std::size_t i = 0; i < reference.size(); ++i) r[i] = reference[i];
  Fft(&d, false);
  Fft(&r, false);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] *= std::conj(r[i]);
    if (phat_weighting) {
      const double mag = std::abs(d[i]);
      if (mag > 1e-12) d[i] /= mag;
    }
  }
  Fft(&d, true);
  std::vector<double> out(2 * static_cast<std::size_t>(max_lag) + 1);
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = d[m].real();
  return out;
}

}  // namespace syncscore
