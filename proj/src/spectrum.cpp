#include "sinest/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "sinest/error.hpp"

namespace sinest {

std::vector<std::complex<double>> dft(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  if (n == 0) return out;

  std::vector<double> cos_table(n), sin_table(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    cos_table[j] = std::cos(angle);
    sin_table[j] = std::sin(angle);
  }
  for (std::size_t m = 0; m < n; ++m) {
    double re = 0.0, im = 0.0;
    std::size_t idx = 0;  // (m * k) mod n
    for (std::size_t k = 0; k < n; ++k) {
      re += x[k] * cos_table[idx];
      im -= x[k] * sin_table[idx];
      idx += m;
      if (idx >= n) idx -= n;
    }
    out[m] = {re, im};
  }
  return out;
}

Spectrum dft_magnitude(const TimeSeries& input, std::size_t pad_to) {
  const std::size_t len = std::max(pad_to, input.size());
  std::vector<double> x(input.samples().begin(), input.samples().end());
  x.resize(len, 0.0);

  const auto full = dft(x);
  Spectrum spec;
  spec.df = 1.0 / (static_cast<double>(len) * input.dt());
  spec.magnitudes.resize(len / 2 + 1);
  for (std::size_t m = 0; m < spec.magnitudes.size(); ++m) spec.magnitudes[m] = std::abs(full[m]);
  return spec;
}

std::size_t peak_bin(const Spectrum& spectrum) {
  if (spectrum.magnitudes.size() < 2) {
    throw InvalidArgument(fmt::format("spectrum needs at least 2 bins, got {}", spectrum.magnitudes.size()));
  }
  std::size_t best = 1;
  for (std::size_t m = 2; m < spectrum.magnitudes.size(); ++m) {
    if (spectrum.magnitudes[m] > spectrum.magnitudes[best]) best = m;
  }
  return best;
}

double fundamental_frequency(const Spectrum& spectrum) { return spectrum.frequency(peak_bin(spectrum)); }

}  // namespace sinest
