#include "sinest/acf.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "sinest/error.hpp"

namespace sinest {

namespace {

constexpr double kBoundSlack = 1e-9;
constexpr double kClampSlack = 1e-6;

// sin(2 pi w) / (2 pi w) and the shared phase term of the full model.
struct FullModelTerms {
  double omega;      // rad/sample
  double sinc;       // sin(2 pi omega) / (2 pi omega)
  double bracket;    // 1 - sinc cos(2 pi omega + 2 phi)
};

FullModelTerms full_model_terms(const SinusoidParams& params, double dt) {
  if (!(dt > 0.0)) throw InvalidArgument(fmt::format("dt must be > 0, got {}", dt));
  FullModelTerms t{};
  t.omega = params.omega() * dt;
  const double x = kTwoPi * t.omega;
  t.sinc = std::sin(x) / x;
  t.bracket = 1.0 - t.sinc * std::cos(x + 2.0 * params.phase_rad());
  return t;
}

}  // namespace

AcfSeries::AcfSeries(AcfKind kind, std::vector<double> values) : kind_(kind), values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("ACF needs at least the lag-0 value");
  if (std::abs(values_[0] - 1.0) > 1e-12) {
    throw InvalidArgument(fmt::format("ACF lag-0 value must be 1, got {}", values_[0]));
  }
  // The full model is not bounded by 1 in general (its numerator swings wider
  // than the lag-0 normalizer when the phase term is off-axis).
  if (kind_ != AcfKind::model_full) {
    for (double v : values_) {
      if (!(std::abs(v) <= 1.0 + kBoundSlack)) {
        throw InvalidArgument(fmt::format("ACF value {} outside [-1, 1]", v));
      }
    }
  }
}

const char* to_string(AcfKind kind) {
  switch (kind) {
    case AcfKind::discrete_circular: return "discrete_circular";
    case AcfKind::model_full: return "model_full";
    case AcfKind::model_reduced: return "model_reduced";
  }
  return "unknown";
}

AcfSeries circular_acf(const TimeSeries& input, std::size_t max_lag) {
  const std::size_t n = input.size();
  if (max_lag < 1 || max_lag > n - 1) {
    throw InvalidArgument(fmt::format("max_lag must be in [1, {}], got {}", n - 1, max_lag));
  }

  const double mean = input.mean();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = input[i] - mean;

  double energy = 0.0;
  for (double v : y) energy += v * v;
  if (!(energy > 0.0)) throw DegenerateData("circular ACF of a constant record is undefined");

  const std::size_t half = std::min(max_lag, n / 2);
  std::vector<double> values(max_lag + 1);
  values[0] = 1.0;
  for (std::size_t lag = 1; lag <= half; ++lag) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = i + lag;
      if (j >= n) j -= n;
      acc += y[i] * y[j];
    }
    values[lag] = acc / energy;
  }
  for (std::size_t lag = half + 1; lag <= max_lag; ++lag) values[lag] = values[n - lag];
  return AcfSeries(AcfKind::discrete_circular, std::move(values));
}

double sine_product_integral(const IntegralParams& p) {
  if (p.a == 0.0) throw InvalidArgument("sine product integral needs a != 0");
  const double width = p.v - p.u;
  return 0.5 * width * std::cos(p.b - p.d) -
         std::sin(p.a * width) * std::cos(p.a * (p.u + p.v) + p.b + p.d) / (2.0 * p.a);
}

double acf_normalization_bracket(const SinusoidParams& params, double dt) {
  return full_model_terms(params, dt).bracket;
}

double normalizing_constant(const SinusoidParams& params, double dt) {
  const double bracket = acf_normalization_bracket(params, dt);
  if (std::abs(bracket) < 1e-12) {
    throw DegenerateParameters(fmt::format(
        "full-model ACF normalizer vanishes for f = {} Hz, phi = {} rad", params.frequency_hz(), params.phase_rad()));
  }
  const double a = params.amplitude();
  return 2.0 / (a * a) / bracket;
}

AcfSeries model_acf_full(const SinusoidParams& params, std::size_t max_lag, double dt) {
  if (max_lag < 1) throw InvalidArgument("max_lag must be >= 1");
  const auto terms = full_model_terms(params, dt);
  if (std::abs(terms.bracket) < 1e-12) {
    throw DegenerateParameters(fmt::format(
        "full-model ACF normalizer vanishes for f = {} Hz, phi = {} rad", params.frequency_hz(), params.phase_rad()));
  }
  const double two_phi = 2.0 * params.phase_rad();
  std::vector<double> values(max_lag + 1);
  values[0] = 1.0;
  for (std::size_t lag = 1; lag <= max_lag; ++lag) {
    const double tau = static_cast<double>(lag);
    const double numerator =
        std::cos(terms.omega * tau) - terms.sinc * std::cos((kTwoPi + tau) * terms.omega + two_phi);
    values[lag] = numerator / terms.bracket;
  }
  return AcfSeries(AcfKind::model_full, std::move(values));
}

AcfSeries model_acf_reduced(const SinusoidParams& params, std::size_t max_lag, double dt) {
  if (max_lag < 1) throw InvalidArgument("max_lag must be >= 1");
  if (!(dt > 0.0)) throw InvalidArgument(fmt::format("dt must be > 0, got {}", dt));
  const double omega = params.omega() * dt;
  std::vector<double> values(max_lag + 1);
  values[0] = 1.0;
  for (std::size_t lag = 1; lag <= max_lag; ++lag) values[lag] = std::cos(omega * static_cast<double>(lag));
  return AcfSeries(AcfKind::model_reduced, std::move(values));
}

double frequency_from_acf(double r_value, std::size_t tau, double dt) {
  if (tau == 0) throw InvalidArgument("frequency from ACF needs a nonzero lag");
  if (!(dt > 0.0)) throw InvalidArgument(fmt::format("dt must be > 0, got {}", dt));
  if (!std::isfinite(r_value) || std::abs(r_value) > 1.0 + kClampSlack) {
    throw InvalidArgument(fmt::format("ACF value {} is outside [-1, 1]", r_value));
  }
  const double r = std::clamp(r_value, -1.0, 1.0);
  return std::acos(r) / (kTwoPi * static_cast<double>(tau) * dt);
}

}  // namespace sinest
