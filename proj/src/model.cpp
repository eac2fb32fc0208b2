#include "sinest/model.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "sinest/error.hpp"

namespace sinest {

double wrap_phase(double phase_rad) {
  if (!std::isfinite(phase_rad)) {
    throw InvalidArgument(fmt::format("phase must be finite, got {}", phase_rad));
  }
  double wrapped = phase_rad - kTwoPi * std::floor((phase_rad + kPi) / kTwoPi);
  // floor() rounding can land exactly on the open end.
  if (wrapped >= kPi) wrapped -= kTwoPi;
  if (wrapped < -kPi) wrapped = -kPi;
  return wrapped;
}

SinusoidParams::SinusoidParams(double amplitude, double frequency_hz, double phase_rad)
    : amplitude_(amplitude), frequency_hz_(frequency_hz), phase_rad_(wrap_phase(phase_rad)) {
  if (!std::isfinite(amplitude) || amplitude <= 0.0) {
    throw InvalidArgument(fmt::format("amplitude must be > 0, got {}", amplitude));
  }
  if (!std::isfinite(frequency_hz) || frequency_hz <= 0.0) {
    throw InvalidArgument(fmt::format("frequency must be > 0 Hz, got {}", frequency_hz));
  }
}

TimeSeries::TimeSeries(double start_time, double dt, std::vector<double> samples)
    : start_time_(start_time), dt_(dt), samples_(std::move(samples)) {
  if (samples_.size() < 2) {
    throw InvalidArgument(fmt::format("time series needs at least 2 samples, got {}", samples_.size()));
  }
  if (!std::isfinite(dt_) || dt_ <= 0.0) {
    throw InvalidArgument(fmt::format("sample interval must be > 0, got {}", dt_));
  }
  if (!std::isfinite(start_time_)) {
    throw InvalidArgument("start time must be finite");
  }
}

double TimeSeries::mean() const {
  return std::accumulate(samples_.begin(), samples_.end(), 0.0) / static_cast<double>(samples_.size());
}

double GaussianSource::uniform_open() {
  // 53 random bits mapped to (0, 1), then to (-1, 1).
  for (;;) {
    const std::uint64_t bits = engine_() >> 11;
    if (bits == 0) continue;
    const double u = static_cast<double>(bits) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  }
}

double GaussianSource::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = uniform_open();
    v = uniform_open();
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

double eval(const SinusoidParams& params, double t) {
  return params.amplitude() * std::sin(params.omega() * t + params.phase_rad());
}

TimeSeries synthesize(const SinusoidParams& params, const NoiseSpec& noise, std::size_t n, double dt,
                      double start) {
  if (n < 2) throw InvalidArgument(fmt::format("need n >= 2 samples, got {}", n));
  if (!std::isfinite(dt) || dt <= 0.0) throw InvalidArgument(fmt::format("dt must be > 0, got {}", dt));
  if (!std::isfinite(noise.sigma) || noise.sigma < 0.0) {
    throw InvalidArgument(fmt::format("noise sigma must be >= 0, got {}", noise.sigma));
  }

  std::vector<double> samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    samples[i] = eval(params, start + static_cast<double>(i) * dt);
  }
  if (noise.sigma > 0.0) {
    GaussianSource gauss(noise.seed);
    for (double& s : samples) s += noise.sigma * gauss.next();
  }
  return TimeSeries(start, dt, std::move(samples));
}

double landmark_time(const SinusoidParams& params, double k) {
  return (k * kPi - params.phase_rad()) / params.omega();
}

LandmarkTable landmarks(const SinusoidParams& params) {
  const auto at = [&](double k) {
    const double t = landmark_time(params, k);
    return Landmark{t, eval(params, t)};
  };

  LandmarkTable table{};
  table.t0 = at(0.0);
  table.t_half_pi = at(0.5);
  table.t_pi = at(1.0);
  table.t_three_half_pi = at(1.5);
  table.t_two_pi = at(2.0);
  table.t_five_half_pi = at(2.5);
  table.value_at_origin = eval(params, 0.0);

  table.rise_to_first_zero = table.t_pi.time - table.t_half_pi.time;
  table.half_cycle = table.t_two_pi.time - table.t_pi.time;
  table.rise_to_next_peak = table.t_five_half_pi.time - table.t_two_pi.time;
  table.period = params.phase_rad() < 0.0 ? table.t_two_pi.time - table.t0.time
                                          : table.t_five_half_pi.time - table.t_half_pi.time;
  return table;
}

}  // namespace sinest
