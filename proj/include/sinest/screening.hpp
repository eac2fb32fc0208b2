#pragma once

#include <cstddef>

#include "sinest/model.hpp"

namespace sinest {

/// Inverse of the standard normal CDF for p in (0, 1).
///
/// Acklam's rational approximation (relative error about 1.2e-9) followed by
/// one Halley step against std::erfc, which brings the result to within a few
/// ulps over the range used for false-alarm rates.
double normal_quantile(double p);

/// Two-sided critical value z_{1 - far/2}.
double two_sided_critical_value(double far);

struct RunsTestResult {
  double z = 0.0;
  std::size_t runs = 0;
  std::size_t n_above = 0;
  std::size_t n_below = 0;
  bool is_random = false;
};

/// Wald-Wolfowitz runs test about the sample median.
///
/// Samples equal to the median are dropped; the remaining ones are labelled
/// above/below and the number of runs R is compared with its null mean and
/// variance through the normal approximation. is_random = |z| < z_{1-far/2}.
/// Requires N >= 20 and far in (0, 0.5); throws DegenerateData when one side
/// of the dichotomy is empty.
RunsTestResult runs_test(const TimeSeries& input, double far);

/// Significance bound z_{1 - far/2} / sqrt(n) for circular ACF values.
double acf_bounds(std::size_t n, double far);

enum class Verdict { signal, noise };
enum class Gate { none, gate1, gate2 };

const char* to_string(Verdict v);
const char* to_string(Gate g);

struct ScreeningDecision {
  double runs_statistic = 0.0;
  std::size_t runs_count = 0;
  std::size_t n_above = 0;
  std::size_t n_below = 0;
  std::size_t acf_exceedances = 0;       // lags 1..floor(N/2) with |r| > acf_bound
  std::size_t required_exceedances = 0;
  bool acf_sign_alternates = false;      // significant lags of both signs seen
  bool acf_computed = false;             // false when gate 1 already rejected
  double acf_bound = 0.0;
  double far = 0.0;
  Verdict verdict = Verdict::noise;
  Gate gate_failed = Gate::none;
};

/// Number of significant ACF lags gate 2 asks for: max(2, ceil(0.05 floor(N/2))).
std::size_t required_acf_exceedances(std::size_t n);

/// Two-gate signal/noise screen.
///
/// Gate 1: a record the runs test calls random is noise, and screening stops.
/// Gate 2: the circular ACF up to lag floor(N/2) must have at least
/// required_acf_exceedances(N) lags outside +-acf_bounds(N, far), with both
/// signs among them. Otherwise the record is noise.
ScreeningDecision screen(const TimeSeries& input, double far);

}  // namespace sinest
