#include "sinest/screening.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "sinest/acf.hpp"
#include "sinest/error.hpp"

namespace sinest {

namespace {

constexpr std::size_t kMinRunsSamples = 20;

void check_far(double far) {
  if (!(far > 0.0 && far < 0.5)) {
    throw InvalidArgument(fmt::format("false alarm rate must be in (0, 0.5), got {}", far));
  }
}

double acklam(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                 1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                 6.680131188771972e+01,  -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                 -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument(fmt::format("quantile probability must be in (0, 1), got {}", p));
  // Refine in the lower tail, where 1 - p is exact and erfc keeps full relative precision.
  if (p > 0.5) return -normal_quantile(1.0 - p);
  double x = acklam(p);
  // Halley refinement.
  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u = e * std::sqrt(kTwoPi) * std::exp(0.5 * x * x);
  x = x - u / (1.0 + 0.5 * x * u);
  return x;
}

double two_sided_critical_value(double far) {
  check_far(far);
  return normal_quantile(1.0 - 0.5 * far);
}

RunsTestResult runs_test(const TimeSeries& input, double far) {
  check_far(far);
  const std::size_t n = input.size();
  if (n < kMinRunsSamples) {
    throw InvalidArgument(fmt::format("runs test needs at least {} samples, got {}", kMinRunsSamples, n));
  }

  std::vector<double> sorted(input.samples().begin(), input.samples().end());
  std::sort(sorted.begin(), sorted.end());
  const double median =
      n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

  RunsTestResult result;
  int previous = 0;  // +1 above, -1 below, 0 none yet
  for (double x : input.samples()) {
    if (x == median) continue;
    const int side = x > median ? 1 : -1;
    if (side > 0) {
      ++result.n_above;
    } else {
      ++result.n_below;
    }
    if (side != previous) ++result.runs;
    previous = side;
  }
  if (result.n_above == 0 || result.n_below == 0) {
    throw DegenerateData("runs test dichotomy is empty on one side of the median");
  }

  const double n1 = static_cast<double>(result.n_above);
  const double n2 = static_cast<double>(result.n_below);
  const double total = n1 + n2;
  const double mean = 2.0 * n1 * n2 / total + 1.0;
  const double variance = 2.0 * n1 * n2 * (2.0 * n1 * n2 - n1 - n2) / (total * total * (total - 1.0));
  if (!(variance > 0.0)) throw DegenerateData("runs test variance vanishes");

  result.z = (static_cast<double>(result.runs) - mean) / std::sqrt(variance);
  result.is_random = std::abs(result.z) < two_sided_critical_value(far);
  return result;
}

double acf_bounds(std::size_t n, double far) {
  if (n == 0) throw InvalidArgument("acf_bounds needs n > 0");
  return two_sided_critical_value(far) / std::sqrt(static_cast<double>(n));
}

std::size_t required_acf_exceedances(std::size_t n) {
  const auto by_fraction = static_cast<std::size_t>(std::ceil(0.05 * static_cast<double>(n / 2)));
  return std::max<std::size_t>(2, by_fraction);
}

const char* to_string(Verdict v) { return v == Verdict::signal ? "signal" : "noise"; }

const char* to_string(Gate g) {
  switch (g) {
    case Gate::none: return "none";
    case Gate::gate1: return "gate1";
    case Gate::gate2: return "gate2";
  }
  return "unknown";
}

ScreeningDecision screen(const TimeSeries& input, double far) {
  const auto runs = runs_test(input, far);

  ScreeningDecision decision;
  decision.far = far;
  decision.runs_statistic = runs.z;
  decision.runs_count = runs.runs;
  decision.n_above = runs.n_above;
  decision.n_below = runs.n_below;
  decision.acf_bound = acf_bounds(input.size(), far);
  decision.required_exceedances = required_acf_exceedances(input.size());

  if (runs.is_random) {
    decision.verdict = Verdict::noise;
    decision.gate_failed = Gate::gate1;
    return decision;
  }

  const auto acf = circular_acf(input, input.size() / 2);
  decision.acf_computed = true;
  bool seen_positive = false;
  bool seen_negative = false;
  for (std::size_t lag = 1; lag <= acf.max_lag(); ++lag) {
    const double r = acf[lag];
    if (std::abs(r) > decision.acf_bound) {
      ++decision.acf_exceedances;
      seen_positive |= r > 0.0;
      seen_negative |= r < 0.0;
    }
  }
  decision.acf_sign_alternates = seen_positive && seen_negative;

  if (decision.acf_exceedances < decision.required_exceedances || !decision.acf_sign_alternates) {
    decision.verdict = Verdict::noise;
    decision.gate_failed = Gate::gate2;
  } else {
    decision.verdict = Verdict::signal;
    decision.gate_failed = Gate::none;
  }
  return decision;
}

}  // namespace sinest
