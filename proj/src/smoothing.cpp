#include "sinest/smoothing.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "sinest/error.hpp"

namespace sinest {

TimeSeries SmoothedSeries::as_time_series() const { return TimeSeries(start_time, dt, samples); }

SmoothedSeries moving_average(const TimeSeries& input, std::size_t k) {
  const std::size_t n = input.size();
  if (k == 0 || k > n) {
    throw InvalidArgument(fmt::format("moving average window must be in [1, {}], got {}", n, k));
  }

  SmoothedSeries out;
  out.window_k = k;
  out.start_time = input.time(k - 1);
  out.dt = input.dt();
  out.source_len = n;
  out.samples.resize(n - k + 1);

  const auto x = input.samples();
  const double inv_k = 1.0 / static_cast<double>(k);
  // Direct per-window sums: O(N k) but free of running-sum drift.
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = i; j < i + k; ++j) sum += x[j];
    out.samples[i] = k == 1 ? sum : sum * inv_k;
  }
  return out;
}

double rms_error(const SmoothedSeries& smoothed, const SinusoidParams& reference) {
  if (smoothed.samples.empty()) throw InvalidArgument("rms_error of an empty series");
  double acc = 0.0;
  for (std::size_t i = 0; i < smoothed.size(); ++i) {
    const double d = smoothed.samples[i] - eval(reference, smoothed.center_time(i));
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(smoothed.size()));
}

double amplitude_estimate(const SmoothedSeries& smoothed) {
  if (smoothed.size() < 2) {
    throw InvalidArgument("amplitude estimate needs at least 2 smoothed samples");
  }
  const auto [lo, hi] = std::minmax_element(smoothed.samples.begin(), smoothed.samples.end());
  return 0.5 * (*hi - *lo);
}

double moving_average_gain(double frequency_hz, std::size_t k, double dt) {
  if (k == 0) throw InvalidArgument("window must be >= 1");
  const double x = kPi * frequency_hz * dt;
  const double denominator = static_cast<double>(k) * std::sin(x);
  if (denominator == 0.0) return 1.0;  // DC (or a multiple of the sample rate) passes unchanged
  return std::abs(std::sin(x * static_cast<double>(k)) / denominator);
}

std::size_t window_for_period_multiple(double period_s, double dt, double multiple, std::size_t n) {
  if (!(period_s > 0.0) || !(dt > 0.0) || !(multiple > 0.0)) {
    throw InvalidArgument("period, dt and multiple must be > 0");
  }
  const double k = std::round(multiple * period_s / dt);
  return static_cast<std::size_t>(std::clamp(k, 1.0, static_cast<double>(std::max<std::size_t>(n, 1))));
}

}  // namespace sinest
