#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sinest/model.hpp"

namespace sinest {

enum class AcfKind { discrete_circular, model_full, model_reduced };

/// Normalized autocorrelation values indexed by lag 0..max_lag.
class AcfSeries {
 public:
  AcfSeries(AcfKind kind, std::vector<double> values);

  AcfKind kind() const { return kind_; }
  std::size_t max_lag() const { return values_.size() - 1; }
  double operator[](std::size_t lag) const { return values_[lag]; }
  std::span<const double> values() const { return values_; }

 private:
  AcfKind kind_;
  std::vector<double> values_;
};

const char* to_string(AcfKind kind);

/// Circular serial correlation of the mean-centered record,
///
///   r(tau) = sum_i y_i y_{(i + tau) mod N} / sum_i y_i^2.
///
/// Lags up to floor(N/2) are summed directly; the rest are filled from the
/// fold-over identity r(tau) = r(N - tau), which holds exactly for circular
/// sums. Requires 1 <= max_lag <= N-1; throws DegenerateData on a constant
/// record.
AcfSeries circular_acf(const TimeSeries& input, std::size_t max_lag);

/// Limits and coefficients of the definite integral of sin(a x + b) sin(a x + d) over [u, v].
struct IntegralParams {
  double a;  // rad/s
  double b;  // rad
  double d;  // rad
  double u;  // s
  double v;  // s
};

/// Closed form of the integral over [u, v] of sin(a x + b) sin(a x + d):
///
///   (v - u)/2 cos(b - d) - sin(a (v - u)) cos(a (u + v) + b + d) / (2a).
///
/// Throws InvalidArgument for a == 0.
double sine_product_integral(const IntegralParams& p);

// The analytic model ACFs below treat lags as sample counts and fold the
// sample interval into the angular frequency: omega = 2 pi f dt rad/sample.
// At dt = 1 this is the plain 2 pi f.

/// 1 - sin(2 pi omega) cos(2 pi omega + 2 phi) / (2 pi omega): the lag-0 value
/// of the one-period sine-product ACF before normalization (in units of A^2/2).
double acf_normalization_bracket(const SinusoidParams& params, double dt = 1.0);

/// C = (2 / A^2) / acf_normalization_bracket(params). Throws DegenerateParameters
/// when the bracket vanishes.
double normalizing_constant(const SinusoidParams& params, double dt = 1.0);

/// Full model ACF (amplitude, frequency and phase all enter):
///
///   r(tau) = [cos(omega tau) - sin(2 pi omega) cos((2 pi + tau) omega + 2 phi) / (2 pi omega)]
///            / [1 - sin(2 pi omega) cos(2 pi omega + 2 phi) / (2 pi omega)].
AcfSeries model_acf_full(const SinusoidParams& params, std::size_t max_lag, double dt = 1.0);

/// Reduced (random phase) model ACF, r(tau) = cos(omega tau).
AcfSeries model_acf_reduced(const SinusoidParams& params, std::size_t max_lag, double dt = 1.0);

/// Frequency in Hz from a reduced-model ACF value at lag tau:
/// f = arccos(r) / (2 pi tau dt). Values outside [-1, 1] by at most 1e-6 are
/// clamped; larger excursions and tau == 0 throw InvalidArgument.
double frequency_from_acf(double r_value, std::size_t tau, double dt = 1.0);

}  // namespace sinest
