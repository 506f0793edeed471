#pragma once

#include <complex>
#include <vector>

#include "holder/daubechies.hpp"

namespace holder {

/// Auxiliary ramp nu(x) = x^4 (35 - 84x + 70x^2 - 20x^3), clamped to [0, 1].
double meyer_ramp(double x);

/// Fourier transform (convention psi_hat(xi) = ∫ psi(x) e^{-i xi x} dx) of the
/// Meyer wavelet. Vanishes outside 2π/3 <= |xi| <= 8π/3.
std::complex<double> meyer_psi_hat(double xi);

/// Meyer psi(x) by Fourier synthesis, tabulated on [-half_width, half_width].
/// Real and symmetric about x = 1/2. The default table is cached.
const RenderedFunction& meyer_psi_table();
RenderedFunction meyer_psi_render(double half_width, int points_per_unit);

/// One term amplitude * sin(2^j π x) or amplitude * cos(2^j π x).
struct TrigTerm {
    enum class Phase { sin, cos };
    int j = 0;
    double amplitude = 0.0;
    Phase phase = Phase::sin;
};

/// Finite lacunary trigonometric series; frequencies strictly increasing.
class TrigSeries {
public:
    TrigSeries() = default;
    explicit TrigSeries(std::vector<TrigTerm> terms);

    const std::vector<TrigTerm>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    double operator()(double x) const;

private:
    std::vector<TrigTerm> terms_;
};

/// Closed-form L∞-normalized Meyer coefficient c_{ell,k} = 2^ell ∫ f ψ(2^ell x - k) dx
/// of a trigonometric series. With Ω = 2^{j-ell} π a term sin contributes
/// (e^{iΩk} ψ̂(-Ω) - e^{-iΩk} ψ̂(Ω)) / 2i and a cos term (e^{iΩk} ψ̂(-Ω) + e^{-iΩk} ψ̂(Ω)) / 2.
std::complex<double> trig_series_coeffs_meyer(const TrigSeries& series, int ell, long k);

/// Terms of the series that can contribute at scale ell (support of ψ̂).
std::vector<int> contributing_frequencies(const TrigSeries& series, int ell);

/// sup over k of |c_{ell,k}|; the coefficients are periodic in k, so one period is scanned.
double meyer_scale_sup(const TrigSeries& series, int ell);

} // namespace holder
