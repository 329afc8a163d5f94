// core/include/syncscore/dsp.h

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

#ifndef SYNCSCORE_DSP_H_
#define SYNCSCORE_DSP_H_

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace syncscore {

/// In-place iterative radix-2 complex FFT. data->size() must be a power of
/// two. The inverse transform includes the 1/N scaling.
void Fft(std::vector<std::complex<double>> *data, bool inverse);

std::size_t NextPowerOfTwo(std::size_t n);

/// Zeroth-order modified Bessel function of the first kind (power series).
double BesselI0(double x);

/// Kaiser window of the given length and shape parameter beta.
std::vector<double> KaiserWindow(int length, double beta);

/// Polyphase windowed-sinc interpolator: evaluates a sampled signal at
/// arbitrary fractional positions. Taps are a Kaiser-windowed sinc with the
/// given cutoff (as a fraction of Nyquist); the signal is treated as zero
/// outside its bounds. Suitable for resampling at ratios near 1.
class SincInterpolator {
 public:
  explicit SincInterpolator(int num_taps = 64, double beta = 9.0,
                            double cutoff = 0.95);

  /// Signal value at fractional position pos.
  double Interpolate(std::span<const float> x, double pos) const;

  int num_taps() const { return num_taps_; }

 private:
  int num_taps_;
  int num_phases_;
  std::vector<double> table_;  // (num_phases_ + 1) rows of num_taps_ taps
};

/// Linear-phase bandpass FIR (windowed-sinc, Hamming window). num_taps must
/// be odd. Cut-off frequencies are in Hz at the given sample rate.
std::vector<double> DesignBandpassFir(double low_hz, double high_hz,
                                      int sample_rate, int num_taps);

/// Full convolution trimmed to input length with the filter's group delay
/// compensated, so the output is time-aligned with the input.
std::vector<float> FirFilter(std::span<const float> x,
                             std::span<const double> taps);

/// Cross-correlation of device against reference over integer lags in
/// [-max_lag, max_lag]: r[m] = sum_j device[m + j] * reference[j], where the
/// device span must be reference.size() + 2 * max_lag long. Computed via FFT.
/// Returns 2 * max_lag + 1 values; index i corresponds to lag i - max_lag.
std::vector<double> CrossCorrelate(std::span<const float> device,
                                   std::span<const float> reference,
                                   int max_lag, bool phat_weighting = false);

}  // namespace syncscore

#endif  // SYNCSCORE_DSP_H_
