#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sinest/model.hpp"

namespace sinest {

/// One-sided DFT magnitude spectrum, bins 0..floor(M/2) for a transform of
/// length M (M = N unless the input was zero-padded).
struct Spectrum {
  double df = 0.0;  // bin width, 1 / (M dt)
  std::vector<double> magnitudes;

  double frequency(std::size_t bin) const { return static_cast<double>(bin) * df; }
};

/// Full complex DFT, X_m = sum_n x_n exp(-i 2 pi m n / N). Direct O(N^2)
/// evaluation with an exact twiddle index (m n mod N).
std::vector<std::complex<double>> dft(std::span<const double> x);

/// Magnitude spectrum of the record. When pad_to > N the record is
/// zero-padded to pad_to samples before the transform.
Spectrum dft_magnitude(const TimeSeries& input, std::size_t pad_to = 0);

/// Index of the largest magnitude among bins 1.. (DC excluded). Ties go to the
/// lowest bin.
std::size_t peak_bin(const Spectrum& spectrum);

/// df * peak_bin(spectrum). Throws InvalidArgument for spectra with < 2 bins.
double fundamental_frequency(const Spectrum& spectrum);

}  // namespace sinest
