#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sinest/model.hpp"

namespace sinest {

/// Output of a trailing k-point moving average.
///
/// Sample i is the mean of input samples i..i+k-1 and carries the time of
/// input sample i+k-1, so the filtered curve lags the input by (k-1)/2 sample
/// intervals. Length is source_len - window_k + 1 (may be 1 when k = N).
struct SmoothedSeries {
  std::size_t window_k = 1;
  double start_time = 0.0;  // time of output sample 0
  double dt = 1.0;
  std::vector<double> samples;
  std::size_t source_len = 0;

  std::size_t size() const { return samples.size(); }
  double time(std::size_t i) const { return start_time + static_cast<double>(i) * dt; }
  double group_delay() const { return 0.5 * static_cast<double>(window_k - 1) * dt; }
  /// Time of sample i corrected for the group delay (center of its window).
  double center_time(std::size_t i) const { return time(i) - group_delay(); }

  /// The filtered record as a TimeSeries at its trailing (uncorrected) times.
  /// Requires at least 2 samples.
  TimeSeries as_time_series() const;
};

/// MA-k filter. Throws InvalidArgument unless 1 <= k <= N.
SmoothedSeries moving_average(const TimeSeries& input, std::size_t k);

/// Root mean square difference between the smoothed samples and the reference
/// sinusoid evaluated at the group-delay corrected sample times.
double rms_error(const SmoothedSeries& smoothed, const SinusoidParams& reference);

/// Half the range (max - min) of the smoothed samples.
double amplitude_estimate(const SmoothedSeries& smoothed);

/// Magnitude response of MA-k at frequency f: |sin(pi f k dt) / (k sin(pi f dt))|.
/// A sinusoid passed through the filter keeps its frequency and is scaled by this.
double moving_average_gain(double frequency_hz, std::size_t k, double dt);

/// Window length covering `multiple` whole periods, rounded to the nearest
/// sample and clamped to [1, n]. Windows spanning whole periods cancel the
/// fundamental, so this is a reference point for choosing k rather than a
/// smoothing default.
std::size_t window_for_period_multiple(double period_s, double dt, double multiple, std::size_t n);

}  // namespace sinest
