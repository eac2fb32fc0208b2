#include "sinest/estimate.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "sinest/error.hpp"

namespace sinest {

namespace {

constexpr double kCoarseStep = 0.01;
constexpr double kFineStep = 0.001;
constexpr int kFineHalfSteps = 10;  // +-0.01 around the coarse winner
constexpr double kWarmStartHalfWidth = 0.5;
constexpr double kFrequencyDisagreement = 0.2;

std::size_t coarse_grid_size() {
  std::size_t count = 0;
  while (-kPi + kCoarseStep * static_cast<double>(count) < kPi) ++count;
  return count;
}

double coarse_point(std::size_t i) { return -kPi + kCoarseStep * static_cast<double>(i); }

PhaseFit refine(const PhaseObjective& obj, double center) {
  PhaseFit best{center, phase_objective_value(obj, center)};
  bool first = true;
  for (int j = -kFineHalfSteps; j <= kFineHalfSteps; ++j) {
    const double phi = center + kFineStep * j;
    const double value = phase_objective_value(obj, phi);
    if (first || value < best.objective) {
      best = {phi, value};
      first = false;
    }
  }
  best.phase_rad = wrap_phase(best.phase_rad);
  return best;
}

// Index of the sample sitting at t = 0, if the record has one.
std::optional<std::size_t> origin_index(const TimeSeries& series) {
  const double pos = -series.start_time() / series.dt();
  const double idx = std::round(pos);
  if (idx < 0.0 || idx >= static_cast<double>(series.size())) return std::nullopt;
  if (std::abs(pos - idx) > 1e-9) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

// Lag of the first ACF peak: the largest value on the first positive
// excursion that follows the first negative value.
std::optional<std::size_t> acf_period_lag(const AcfSeries& acf, std::size_t limit) {
  limit = std::min(limit, acf.max_lag());
  std::size_t lag = 1;
  while (lag <= limit && acf[lag] >= 0.0) ++lag;
  while (lag <= limit && acf[lag] < 0.0) ++lag;
  if (lag > limit) return std::nullopt;
  std::size_t best = lag;
  for (; lag <= limit && acf[lag] >= 0.0; ++lag) {
    if (acf[lag] > acf[best]) best = lag;
  }
  return best;
}

void check_relative(std::vector<std::string>& warnings, const char* name, std::optional<double> value,
                    double reference) {
  if (!value) return;
  const double rel = std::abs(*value - reference) / reference;
  if (rel > kFrequencyDisagreement) {
    warnings.push_back(fmt::format("{} frequency {:.6g} Hz disagrees with FFT {:.6g} Hz by {:.1f}%", name, *value,
                                   reference, 100.0 * rel));
  }
}

}  // namespace

const char* to_string(ObjectiveRange r) { return r == ObjectiveRange::one_period ? "one_period" : "full_record"; }

const char* to_string(FrequencySource s) {
  switch (s) {
    case FrequencySource::fft: return "fft";
    case FrequencySource::acf_arccos: return "acf_arccos";
    case FrequencySource::ma_period: return "ma_period";
  }
  return "unknown";
}

ObjectiveRange parse_objective_range(const std::string& text) {
  if (text == "one_period") return ObjectiveRange::one_period;
  if (text == "full_record") return ObjectiveRange::full_record;
  throw InvalidArgument(fmt::format("unknown objective range '{}'", text));
}

FrequencySource parse_frequency_source(const std::string& text) {
  if (text == "fft") return FrequencySource::fft;
  if (text == "acf_arccos") return FrequencySource::acf_arccos;
  if (text == "ma_period") return FrequencySource::ma_period;
  throw InvalidArgument(fmt::format("unknown frequency source '{}'", text));
}

PhaseObjective::PhaseObjective(const TimeSeries& series, double amplitude, double frequency_hz, ObjectiveRange range)
    : data(&series), fixed_amplitude(amplitude), fixed_frequency_hz(frequency_hz), t_range(range) {
  if (!(amplitude > 0.0)) throw InvalidArgument(fmt::format("objective amplitude must be > 0, got {}", amplitude));
  if (!(frequency_hz > 0.0)) throw InvalidArgument(fmt::format("objective frequency must be > 0, got {}", frequency_hz));
}

double phase_objective_value(const PhaseObjective& obj, double phi) {
  const TimeSeries& x = *obj.data;
  const double omega = kTwoPi * obj.fixed_frequency_hz;
  std::size_t count = x.size();
  if (obj.t_range == ObjectiveRange::one_period) {
    const double last = x.start_time() + 1.0 / obj.fixed_frequency_hz + 1e-9 * x.dt();
    count = 0;
    while (count < x.size() && x.time(count) <= last) ++count;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double r = x[i] - obj.fixed_amplitude * std::sin(omega * x.time(i) + phi);
    sum += r * r;
  }
  return sum;
}

PhaseFit phase_grid_search(const PhaseObjective& obj) {
  const std::size_t n = coarse_grid_size();
  std::size_t best = 0;
  double best_value = phase_objective_value(obj, coarse_point(0));
  for (std::size_t i = 1; i < n; ++i) {
    const double value = phase_objective_value(obj, coarse_point(i));
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  return refine(obj, coarse_point(best));
}

PhaseFit phase_grid_search(const PhaseObjective& obj, double center, double half_width) {
  const std::size_t n = coarse_grid_size();
  std::optional<std::size_t> best;
  double best_value = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double phi = coarse_point(i);
    if (std::abs(wrap_phase(phi - center)) > half_width) continue;
    const double value = phase_objective_value(obj, phi);
    if (!best || value < best_value) {
      best_value = value;
      best = i;
    }
  }
  if (!best) return phase_grid_search(obj);
  return refine(obj, coarse_point(*best));
}

CrossoverPhase phase_from_crossover(double period, double t_2pi) {
  if (!(period > 0.0)) throw InvalidArgument(fmt::format("period must be > 0, got {}", period));
  const double fraction = (period - t_2pi) / period;
  return {fraction * 360.0, fraction * kTwoPi};
}

double phase_from_landmarks_general(double period, double t_2pi, double t_kpi, double k) {
  if (k == 2.0) throw InvalidArgument("landmark phase formula needs k != 2");
  if (t_kpi == t_2pi) throw InvalidArgument("landmark times coincide");
  return (period - t_2pi) / (t_kpi - t_2pi) * (k * kPi - kTwoPi);
}

double phase_arctan_at_origin(double amplitude, double x0) {
  if (!(std::abs(x0) < amplitude)) {
    throw InvalidArgument(fmt::format("arctan phase needs |x0| < A (x0 = {}, A = {})", x0, amplitude));
  }
  return std::atan(x0 / std::sqrt(amplitude * amplitude - x0 * x0));
}

double phase_arcsin_at_time(double amplitude, double omega, double t, double y) {
  if (!(amplitude > 0.0)) throw InvalidArgument("arcsin phase needs A > 0");
  if (!(std::abs(y) <= amplitude)) {
    throw InvalidArgument(fmt::format("arcsin phase needs |y| <= A (y = {}, A = {})", y, amplitude));
  }
  return wrap_phase(std::asin(y / amplitude) - omega * t);
}

std::vector<double> upward_crossings(const SmoothedSeries& smoothed) {
  std::vector<double> out;
  const auto& s = smoothed.samples;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] <= 0.0 && s[i + 1] > 0.0) {
      out.push_back(smoothed.center_time(i) + smoothed.dt * (-s[i]) / (s[i + 1] - s[i]));
    }
  }
  return out;
}

Crossovers detect_crossovers(const SmoothedSeries& smoothed) {
  const auto& s = smoothed.samples;
  constexpr double kOriginSlack = -1e-9;
  std::optional<double> down;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (!down) {
      if (s[i] > 0.0 && s[i + 1] <= 0.0) {
        const double t = smoothed.center_time(i) + smoothed.dt * s[i] / (s[i] - s[i + 1]);
        if (t >= kOriginSlack) down = t;
      }
    } else if (s[i] <= 0.0 && s[i + 1] > 0.0) {
      const double t = smoothed.center_time(i) + smoothed.dt * (-s[i]) / (s[i + 1] - s[i]);
      return {*down, t};
    }
  }
  throw DegenerateData(down ? "no upward zero crossing after the first downward crossing"
                            : "no downward zero crossing at t >= 0");
}

double detect_t2pi(const SmoothedSeries& smoothed) { return detect_crossovers(smoothed).t_2pi; }

void PipelineConfig::validate() const {
  if (!(far > 0.0 && far < 0.5)) throw InvalidArgument(fmt::format("far must be in (0, 0.5), got {}", far));
  if (ma_k < 1) throw InvalidArgument("ma_k must be >= 1");
  if (max_lag && *max_lag < 1) throw InvalidArgument("max_lag must be >= 1");
}

EstimationReport estimate_parameters(const TimeSeries& input, const PipelineConfig& config) {
  config.validate();
  const std::size_t n = input.size();
  const double dt = input.dt();

  EstimationReport report;
  report.smoothing_k = config.ma_k;
  report.objective_range = config.objective_range;
  report.frequency_source = config.frequency_source;

  // (1) screening
  if (!config.bypass_screening) {
    report.screening = screen(input, config.far);
    if (report.screening->verdict == Verdict::noise) return report;
  }

  // (2) smoothing, (3) amplitude
  report.smoothed = moving_average(input, config.ma_k);
  const double amplitude = amplitude_estimate(*report.smoothed);
  if (!(amplitude > 0.0)) throw DegenerateData("smoothed record is constant; amplitude is zero");

  // (4) frequency
  report.spectrum = dft_magnitude(input, config.fft_pad_to);
  auto& checks = report.frequency_checks;
  checks.fft_bin = peak_bin(*report.spectrum);
  checks.fft_hz = report.spectrum->frequency(checks.fft_bin);

  const std::size_t max_lag = std::min(config.max_lag.value_or(n - 1), n - 1);
  report.discrete_acf = circular_acf(input, max_lag);
  if (const auto lag = acf_period_lag(*report.discrete_acf, n / 2)) {
    checks.acf_period_lag = *lag;
    checks.acf_period_hz = 1.0 / (static_cast<double>(*lag) * dt);
    const auto tau = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(static_cast<double>(*lag) / 4.0)));
    checks.acf_arccos_lag = tau;
    const double f = frequency_from_acf((*report.discrete_acf)[tau], tau, dt);
    if (f > 0.0) checks.acf_arccos_hz = f;
  }
  if (const auto ups = upward_crossings(*report.smoothed); ups.size() >= 2) {
    checks.ma_period_hz = static_cast<double>(ups.size() - 1) / (ups.back() - ups.front());
  }

  check_relative(report.warnings, "acf_arccos", checks.acf_arccos_hz, checks.fft_hz);
  check_relative(report.warnings, "acf_period", checks.acf_period_hz, checks.fft_hz);
  check_relative(report.warnings, "ma_period", checks.ma_period_hz, checks.fft_hz);

  double frequency = checks.fft_hz;
  std::optional<double> chosen;
  switch (config.frequency_source) {
    case FrequencySource::fft: chosen = checks.fft_hz; break;
    case FrequencySource::acf_arccos: chosen = checks.acf_arccos_hz; break;
    case FrequencySource::ma_period: chosen = checks.ma_period_hz; break;
  }
  if (chosen) {
    frequency = *chosen;
  } else {
    report.frequency_source = FrequencySource::fft;
    report.warnings.push_back(
        fmt::format("{} frequency unavailable; using the FFT peak", to_string(config.frequency_source)));
  }
  const double omega = kTwoPi * frequency;
  const double period = 1.0 / frequency;

  // Crossings feed the warm start and the phase cross-checks.
  std::optional<Crossovers> crossings;
  try {
    crossings = detect_crossovers(*report.smoothed);
    report.t_pi = crossings->t_pi;
    report.t_2pi = crossings->t_2pi;
  } catch (const DegenerateData& e) {
    report.warnings.push_back(fmt::format("crossover detection failed: {}", e.what()));
  }

  // (5) phase
  const PhaseObjective objective(input, amplitude, frequency, config.objective_range);
  PhaseFit fit{};
  if (config.warm_start && crossings) {
    const double center = wrap_phase(phase_from_crossover(period, crossings->t_2pi).radians);
    fit = phase_grid_search(objective, center, kWarmStartHalfWidth);
  } else {
    if (config.warm_start) report.warnings.push_back("warm start unavailable without crossovers; full sweep used");
    fit = phase_grid_search(objective);
  }

  report.params = SinusoidParams(amplitude, frequency, fit.phase_rad);
  report.objective_value = fit.objective;
  report.delta_t = report.params->time_delay();

  auto& phases = report.phase_cross_checks;
  phases["grid_search"] = report.params->phase_rad();
  if (crossings) {
    phases["crossover"] = wrap_phase(phase_from_crossover(period, crossings->t_2pi).radians);
    if (crossings->t_pi != crossings->t_2pi) {
      phases["landmarks_k1"] =
          wrap_phase(phase_from_landmarks_general(period, crossings->t_2pi, crossings->t_pi, 1.0));
    }
    // First smoothed sample past the 2 pi crossing lies on a rising quarter-cycle.
    const auto& sm = *report.smoothed;
    for (std::size_t i = 0; i < sm.size(); ++i) {
      if (sm.center_time(i) > crossings->t_2pi) {
        if (std::abs(sm.samples[i]) <= amplitude) {
          phases["arcsin"] = phase_arcsin_at_time(amplitude, omega, sm.center_time(i), sm.samples[i]);
        }
        break;
      }
    }
  }
  if (const auto origin = origin_index(input); origin && std::abs(input[*origin]) < amplitude) {
    phases["arctan"] = phase_arctan_at_origin(amplitude, input[*origin]);
  }

  // (6) model ACF of the fitted sinusoid
  try {
    report.fitted_model_acf = model_acf_full(*report.params, std::max<std::size_t>(1, n / 2), dt);
  } catch (const DegenerateParameters& e) {
    report.warnings.push_back(fmt::format("model ACF unavailable: {}", e.what()));
  }
  return report;
}

}  // namespace sinest
