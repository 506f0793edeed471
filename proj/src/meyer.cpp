#include "holder/meyer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "holder/errors.hpp"

namespace holder {
namespace {

constexpr double pi = std::numbers::pi;

// |psi_hat| on xi >= 0
double meyer_amplitude(double xi) {
    if (xi < 2.0 * pi / 3.0 || xi > 8.0 * pi / 3.0) return 0.0;
    if (xi <= 4.0 * pi / 3.0) return std::sin(pi / 2.0 * meyer_ramp(3.0 * xi / (2.0 * pi) - 1.0));
    return std::cos(pi / 2.0 * meyer_ramp(3.0 * xi / (4.0 * pi) - 1.0));
}

// (1/π) ∫_a^b A(xi) cos(xi t) dxi by composite Simpson
double synthesis_piece(double a, double b, double t, int intervals) {
    const double hstep = (b - a) / intervals;
    double acc = meyer_amplitude(a) * std::cos(a * t) + meyer_amplitude(b) * std::cos(b * t);
    for (int i = 1; i < intervals; ++i) {
        const double xi = a + i * hstep;
        acc += (i % 2 == 1 ? 4.0 : 2.0) * meyer_amplitude(xi) * std::cos(xi * t);
    }
    return acc * hstep / 3.0 / pi;
}

// sin/cos(2^j π x) with the phase reduced exactly
double dyadic_trig(int j, double x, TrigTerm::Phase phase) {
    const double turns = std::fmod(std::ldexp(x, j), 2.0);
    return phase == TrigTerm::Phase::sin ? std::sin(pi * turns) : std::cos(pi * turns);
}

} // namespace

double meyer_ramp(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double x4 = x * x * x * x;
    return x4 * (35.0 - 84.0 * x + 70.0 * x * x - 20.0 * x * x * x);
}

std::complex<double> meyer_psi_hat(double xi) {
    const double a = meyer_amplitude(std::abs(xi));
    if (a == 0.0) return {0.0, 0.0};
    return std::polar(a, -xi / 2.0);
}

RenderedFunction meyer_psi_render(double half_width, int points_per_unit) {
    if (half_width <= 0.0 || points_per_unit < 1)
        throw domain_error("bad Meyer rendering window");
    RenderedFunction out;
    out.step = 1.0 / points_per_unit;
    const long half = static_cast<long>(std::ceil(half_width * points_per_unit));
    out.x_min = -static_cast<double>(half) * out.step;
    out.values.resize(static_cast<std::size_t>(2 * half + 1));
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        const double t = out.x_min + static_cast<double>(i) * out.step - 0.5;
        out.values[i] = synthesis_piece(2.0 * pi / 3.0, 4.0 * pi / 3.0, t, 1024) +
                        synthesis_piece(4.0 * pi / 3.0, 8.0 * pi / 3.0, t, 2048);
    }
    return out;
}

const RenderedFunction& meyer_psi_table() {
    static const RenderedFunction table = meyer_psi_render(40.0, 128);
    return table;
}

TrigSeries::TrigSeries(std::vector<TrigTerm> terms) : terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (!std::isfinite(terms_[i].amplitude))
            throw domain_error("trigonometric series amplitudes must be finite");
        if (i > 0 && terms_[i].j <= terms_[i - 1].j)
            throw domain_error("trigonometric series frequencies must be strictly increasing");
    }
}

double TrigSeries::operator()(double x) const {
    double acc = 0.0;
    for (const auto& t : terms_) acc += t.amplitude * dyadic_trig(t.j, x, t.phase);
    return acc;
}

std::vector<int> contributing_frequencies(const TrigSeries& series, int ell) {
    std::vector<int> out;
    for (const auto& t : series.terms()) {
        const int d = t.j - ell;
        if (d < -2 || d > 3) continue;
        if (meyer_amplitude(std::ldexp(pi, d)) > 0.0) out.push_back(t.j);
    }
    return out;
}

std::complex<double> trig_series_coeffs_meyer(const TrigSeries& series, int ell, long k) {
    using cplx = std::complex<double>;
    const cplx two_i(0.0, 2.0);
    cplx acc(0.0, 0.0);
    for (const auto& t : series.terms()) {
        const int d = t.j - ell;
        if (d < -2 || d > 3) continue;
        const double omega = std::ldexp(pi, d);
        const cplx hat_pos = meyer_psi_hat(omega);
        if (hat_pos == cplx(0.0, 0.0)) continue;
        const cplx hat_neg = meyer_psi_hat(-omega);
        // e^{iΩk} with Ωk = 2^d π k reduced exactly
        const double turns = std::fmod(std::ldexp(static_cast<double>(k), d), 2.0);
        const cplx e_pos = std::polar(1.0, pi * turns);
        const cplx e_neg = std::conj(e_pos);
        const cplx term = t.phase == TrigTerm::Phase::sin
                              ? (e_pos * hat_neg - e_neg * hat_pos) / two_i
                              : (e_pos * hat_neg + e_neg * hat_pos) / 2.0;
        acc += t.amplitude * term;
    }
    return acc;
}

double meyer_scale_sup(const TrigSeries& series, int ell) {
    const auto freqs = contributing_frequencies(series, ell);
    if (freqs.empty()) return 0.0;
    const int d_min = *std::min_element(freqs.begin(), freqs.end()) - ell;
    const long period = 1L << std::max(0, 1 - d_min);
    double best = 0.0;
    for (long k = 0; k < period; ++k)
        best = std::max(best, std::abs(trig_series_coeffs_meyer(series, ell, k)));
    return best;
}

} // namespace holder
