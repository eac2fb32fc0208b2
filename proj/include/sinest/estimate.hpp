#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sinest/acf.hpp"
#include "sinest/model.hpp"
#include "sinest/screening.hpp"
#include "sinest/smoothing.hpp"
#include "sinest/spectrum.hpp"

namespace sinest {

enum class ObjectiveRange { one_period, full_record };
enum class FrequencySource { fft, acf_arccos, ma_period };

const char* to_string(ObjectiveRange r);
const char* to_string(FrequencySource s);
ObjectiveRange parse_objective_range(const std::string& text);
FrequencySource parse_frequency_source(const std::string& text);

/// Least-squares phase objective with amplitude and frequency held fixed.
struct PhaseObjective {
  const TimeSeries* data;
  double fixed_amplitude;
  double fixed_frequency_hz;
  ObjectiveRange t_range = ObjectiveRange::one_period;

  PhaseObjective(const TimeSeries& series, double amplitude, double frequency_hz,
                 ObjectiveRange range = ObjectiveRange::one_period);
};

/// Sum of squared residuals X(t) - A sin(omega t + phi). In one_period mode
/// only samples with start <= t <= start + T enter the sum.
double phase_objective_value(const PhaseObjective& obj, double phi);

struct PhaseFit {
  double phase_rad;
  double objective;
};

/// Coarse sweep phi = -pi + 0.01 i over [-pi, pi), then a 0.001-step sweep of
/// [phi0 - 0.01, phi0 + 0.01] around the coarse winner. Ties keep the smaller
/// phase. The result is wrapped into [-pi, pi).
PhaseFit phase_grid_search(const PhaseObjective& obj);

/// Same search with the coarse sweep limited to coarse grid points within
/// half_width of `center` (wrapping around +-pi).
PhaseFit phase_grid_search(const PhaseObjective& obj, double center, double half_width);

struct CrossoverPhase {
  double degrees;
  double radians;
};

/// phi = 2 pi (T - t_2pi) / T, from the period and the upward zero crossing
/// where omega t + phi = 2 pi. Not wrapped.
CrossoverPhase phase_from_crossover(double period, double t_2pi);

/// phi = (T - t_2pi) / (t_kpi - t_2pi) (k pi - 2 pi) for any landmark k != 2.
double phase_from_landmarks_general(double period, double t_2pi, double t_kpi, double k);

/// Right-triangle phase from the value at the origin: atan(x0 / sqrt(A^2 - x0^2)).
/// Only covers |phi| < pi/2; throws InvalidArgument for |x0| >= A.
double phase_arctan_at_origin(double amplitude, double x0);

/// asin(y / A) - omega t, wrapped into [-pi, pi). Principal asin branch, so
/// valid when t lies on a rising quarter-cycle. Throws for |y| > A.
double phase_arcsin_at_time(double amplitude, double omega, double t, double y);

/// Interpolated zero crossings read off a smoothed record.
struct Crossovers {
  double t_pi;    // downward crossing, omega t + phi = pi
  double t_2pi;   // following upward crossing, omega t + phi = 2 pi
};

/// Finds the first downward zero crossing at t >= 0 and the upward crossing
/// that follows it, both by linear interpolation on the smoothed samples and
/// shifted back by the MA group delay (k-1)/2 dt. Throws DegenerateData when
/// either crossing is missing.
Crossovers detect_crossovers(const SmoothedSeries& smoothed);

/// detect_crossovers(smoothed).t_2pi. The upward crossing that follows a
/// downward one is the 2 pi crossing for every phase in [-pi, pi): for
/// phi >= 0 it is the first upward crossing after the origin, for a
/// time-ahead sinusoid (phi < 0) the second.
double detect_t2pi(const SmoothedSeries& smoothed);

/// Upward zero crossings of the smoothed record (group-delay corrected).
std::vector<double> upward_crossings(const SmoothedSeries& smoothed);

struct PipelineConfig {
  double far = 0.01;
  std::size_t ma_k = 5;
  ObjectiveRange objective_range = ObjectiveRange::one_period;
  bool warm_start = false;
  std::optional<std::size_t> max_lag;  // discrete ACF lags; default N - 1
  FrequencySource frequency_source = FrequencySource::fft;
  bool bypass_screening = false;
  std::size_t fft_pad_to = 0;          // zero-pad the FFT input to this length

  void validate() const;
};

struct FrequencyChecks {
  double fft_hz = 0.0;
  std::size_t fft_bin = 0;
  std::optional<double> acf_period_hz;   // 1 / (lag of the first ACF peak)
  std::optional<std::size_t> acf_period_lag;
  std::optional<double> acf_arccos_hz;      // arccos at a quarter-period lag
  std::optional<std::size_t> acf_arccos_lag;
  std::optional<double> ma_period_hz;    // spacing of smoothed upward crossings
};

struct EstimationReport {
  std::optional<ScreeningDecision> screening;  // absent when bypassed
  std::optional<SinusoidParams> params;        // absent for a noise verdict
  FrequencySource frequency_source = FrequencySource::fft;
  FrequencyChecks frequency_checks;
  std::optional<double> t_2pi;
  std::optional<double> t_pi;
  double delta_t = 0.0;
  double objective_value = 0.0;
  ObjectiveRange objective_range = ObjectiveRange::one_period;
  std::map<std::string, double> phase_cross_checks;
  std::size_t smoothing_k = 0;
  std::vector<std::string> warnings;

  // Intermediates.
  std::optional<SmoothedSeries> smoothed;
  std::optional<Spectrum> spectrum;
  std::optional<AcfSeries> discrete_acf;
  std::optional<AcfSeries> fitted_model_acf;  // full model of the fitted sinusoid, lags 0..N/2

  bool is_signal() const { return params.has_value(); }
};

/// Screen, smooth, then recover amplitude, frequency and phase.
///
/// Amplitude is half the range of the MA-k record, frequency the FFT peak
/// (cross-checked against the circular ACF and the smoothed zero crossings,
/// with a warning past 20% disagreement), phase the grid-search minimizer of
/// the least-squares objective with A and f held fixed. A noise verdict
/// yields a report without parameters.
EstimationReport estimate_parameters(const TimeSeries& input, const PipelineConfig& config = {});

}  // namespace sinest
