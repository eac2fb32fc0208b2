#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace sinest {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into [-pi, pi).
double wrap_phase(double phase_rad);

/// Amplitude, frequency and phase of x(t) = A sin(2 pi f t + phi).
///
/// The phase is stored wrapped into [-pi, pi). Amplitude and frequency must be
/// finite and strictly positive.
class SinusoidParams {
 public:
  SinusoidParams(double amplitude, double frequency_hz, double phase_rad);

  double amplitude() const { return amplitude_; }
  double frequency_hz() const { return frequency_hz_; }
  double phase_rad() const { return phase_rad_; }

  /// Angular frequency in rad/s.
  double omega() const { return kTwoPi * frequency_hz_; }
  double period() const { return 1.0 / frequency_hz_; }
  /// phi / omega. Shifting t by this amount yields the zero-phase sinusoid.
  double time_delay() const { return phase_rad_ / omega(); }

  friend bool operator==(const SinusoidParams&, const SinusoidParams&) = default;

 private:
  double amplitude_;
  double frequency_hz_;
  double phase_rad_;
};

/// Uniformly sampled real-valued record. Sample i sits at start_time + i * dt.
class TimeSeries {
 public:
  TimeSeries(double start_time, double dt, std::vector<double> samples);

  double start_time() const { return start_time_; }
  double dt() const { return dt_; }
  std::size_t size() const { return samples_.size(); }
  double time(std::size_t i) const { return start_time_ + static_cast<double>(i) * dt_; }
  double operator[](std::size_t i) const { return samples_[i]; }
  std::span<const double> samples() const { return samples_; }

  double mean() const;

 private:
  double start_time_;
  double dt_;
  std::vector<double> samples_;
};

enum class NoiseKind { gaussian };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::gaussian;
  double sigma = 0.0;
  std::uint64_t seed = 0;
};

/// Portable standard-normal source.
///
/// Uniforms are built from the top 53 bits of std::mt19937_64 (whose output
/// sequence is fixed by the standard) and turned into normals with the
/// Marsaglia polar method, so a given seed yields the same sequence with any
/// conforming standard library.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  double uniform_open();  // (-1, 1)

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

double eval(const SinusoidParams& params, double t);

/// Samples params on the grid start + i * dt and adds i.i.d. N(0, sigma^2)
/// noise drawn from a GaussianSource seeded with noise.seed. With sigma == 0
/// no draws are made and the samples equal eval() exactly.
TimeSeries synthesize(const SinusoidParams& params, const NoiseSpec& noise, std::size_t n,
                      double dt = 1.0, double start = 0.0);

struct Landmark {
  double time;
  double value;
};

/// Zero crossings and extrema of a time-delayed sinusoid, t_k = (k pi - phi) / omega.
struct LandmarkTable {
  Landmark t0;               // omega t + phi = 0
  Landmark t_half_pi;        // first maximum
  Landmark t_pi;             // downward crossing
  Landmark t_three_half_pi;  // minimum
  Landmark t_two_pi;         // upward crossing
  Landmark t_five_half_pi;   // next maximum
  double value_at_origin;    // A sin(phi)

  // Period decomposition: quarter + half + quarter.
  double rise_to_first_zero;  // t_pi - t_half_pi
  double half_cycle;          // t_two_pi - t_pi
  double rise_to_next_peak;   // t_five_half_pi - t_two_pi
  /// t_{5pi/2} - t_{pi/2} for phi >= 0; t_{2pi} - t_0 for a time-ahead (phi < 0) sinusoid.
  double period;
};

LandmarkTable landmarks(const SinusoidParams& params);

/// Time at which omega t + phi = k pi, with k counted in multiples of pi.
double landmark_time(const SinusoidParams& params, double k);

}  // namespace sinest
