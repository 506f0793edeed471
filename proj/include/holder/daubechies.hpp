#pragma once

#include <cstddef>
#include <vector>

namespace holder {

/// Orthonormal Daubechies lowpass filter with N vanishing moments (2N taps,
/// sum sqrt(2)), obtained by spectral factorization. Supported N: 1..10.
std::vector<double> daubechies_filter(int N);

/// Highpass partner g[n] = (-1)^n h[L-1-n].
std::vector<double> quadrature_mirror(const std::vector<double>& h);

/// Approximate Hölder regularity of the Daubechies wavelet with N vanishing moments.
double daubechies_regularity(int N);

/// A function tabulated on x_min + i*step, linearly interpolated, zero outside.
struct RenderedFunction {
    double x_min = 0.0;
    double step = 1.0;
    std::vector<double> values;

    double x_max() const { return x_min + step * static_cast<double>(values.size() - 1); }
    double operator()(double x) const;
};

/// Scaling function phi on [0, L-1] at 2^levels points per unit (cascade refinement
/// from the exact integer values).
RenderedFunction cascade_scaling(const std::vector<double>& h, int levels);

/// psi(x) = sqrt(2) sum_n g[n] phi(2x - n) on [0, L-1] at 2^levels points per unit.
RenderedFunction cascade_wavelet(const std::vector<double>& h, int levels);

/// phi at the integers 0..L-1 (normalized to sum 1).
std::vector<double> scaling_integer_values(const std::vector<double>& h);

} // namespace holder
