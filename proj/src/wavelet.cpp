#include "holder/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "holder/errors.hpp"
#include "holder/meyer.hpp"

namespace holder {

WaveletSpec WaveletSpec::daubechies(int N) {
    if (N < 2) throw domain_error("daubechies wavelets need at least 2 vanishing moments here");
    WaveletSpec s;
    s.family = Family::daubechies;
    s.vanishing_moments = N;
    s.taps = daubechies_filter(N);
    s.regularity_gamma = daubechies_regularity(N);
    return s;
}

WaveletSpec WaveletSpec::meyer() {
    WaveletSpec s;
    s.family = Family::meyer_fourier;
    s.vanishing_moments = 0;
    s.regularity_gamma = std::numeric_limits<double>::infinity();
    return s;
}

WaveletSpec WaveletSpec::parse(const std::string& s) {
    if (s == "meyer") return meyer();
    const std::string prefix = "daubechies:";
    if (s.rfind(prefix, 0) == 0) {
        const std::string n = s.substr(prefix.size());
        std::size_t used = 0;
        int N = 0;
        try {
            N = std::stoi(n, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != n.size())
            throw domain_error("bad vanishing-moment count in '" + s + "'");
        return daubechies(N);
    }
    throw domain_error("unknown wavelet '" + s + "' (expected daubechies:N or meyer)");
}

std::string WaveletSpec::name() const {
    if (family == Family::meyer_fourier) return "meyer";
    return "daubechies:" + std::to_string(vanishing_moments);
}

CoeffPyramid::CoeffPyramid(std::vector<ScaleCoeffs> scales) : scales_(std::move(scales)) {
    for (std::size_t i = 1; i < scales_.size(); ++i)
        if (scales_[i].j != scales_[i - 1].j + 1)
            throw domain_error("pyramid scales must be consecutive");
    for (auto& s : scales_)
        if (s.excluded.size() != s.coeffs.size()) s.excluded.assign(s.coeffs.size(), 0);
    refresh_sups();
}

CoeffPyramid CoeffPyramid::from_sups(int j_min, std::span<const double> sups) {
    std::vector<ScaleCoeffs> out;
    for (std::size_t i = 0; i < sups.size(); ++i) {
        if (!(sups[i] >= 0.0) || !std::isfinite(sups[i]))
            throw domain_error("scale sups must be finite and nonnegative");
        ScaleCoeffs sc;
        sc.j = j_min + static_cast<int>(i);
        sc.coeffs = {sups[i]};
        out.push_back(std::move(sc));
    }
    return CoeffPyramid(std::move(out));
}

const ScaleCoeffs& CoeffPyramid::at(int j) const {
    if (scales_.empty() || j < j_min() || j > j_max())
        throw domain_error("scale " + std::to_string(j) + " is not stored in the pyramid");
    return scales_[static_cast<std::size_t>(j - j_min())];
}

std::vector<int> CoeffPyramid::scale_indices() const {
    std::vector<int> out;
    for (const auto& s : scales_) out.push_back(s.j);
    return out;
}

std::vector<double> CoeffPyramid::sup_per_scale() const {
    std::vector<double> out;
    for (const auto& s : scales_) out.push_back(s.sup);
    return out;
}

void CoeffPyramid::refresh_sups() {
    for (auto& s : scales_) {
        double m = 0.0;
        for (std::size_t i = 0; i < s.coeffs.size(); ++i)
            if (!s.excluded[i]) m = std::max(m, std::abs(s.coeffs[i]));
        s.sup = m;
    }
}

namespace {

bool is_power_of_two(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    int m = 0;
    while ((std::size_t{1} << m) < n) ++m;
    return m;
}

// one analysis step: approx and detail of half length
void analysis_step(std::span<const double> a, const std::vector<double>& h,
                   const std::vector<double>& g, std::vector<double>& approx,
                   std::vector<double>& detail) {
    const std::size_t n = a.size();
    const std::size_t half = n / 2;
    approx.assign(half, 0.0);
    detail.assign(half, 0.0);
    for (std::size_t k = 0; k < half; ++k) {
        double sa = 0.0, sd = 0.0;
        for (std::size_t t = 0; t < h.size(); ++t) {
            const double v = a[(2 * k + t) % n];
            sa += h[t] * v;
            sd += g[t] * v;
        }
        approx[k] = sa;
        detail[k] = sd;
    }
}

void synthesis_step(std::span<const double> approx, std::span<const double> detail,
                    const std::vector<double>& h, const std::vector<double>& g,
                    std::vector<double>& out) {
    const std::size_t half = approx.size();
    const std::size_t n = 2 * half;
    out.assign(n, 0.0);
    for (std::size_t k = 0; k < half; ++k)
        for (std::size_t t = 0; t < h.size(); ++t)
            out[(2 * k + t) % n] += h[t] * approx[k] + g[t] * detail[k];
}

} // namespace

int grid_scale(const SampledSignal& signal) {
    const double J = -std::log2(signal.dx());
    const double Jr = std::round(J);
    if (std::abs(J - Jr) > 1e-9)
        throw domain_error("filter-bank path needs a dyadic grid step dx = 2^-J");
    return static_cast<int>(Jr);
}

std::vector<double> dwt_forward(std::span<const double> data, const std::vector<double>& h,
                                int levels) {
    const std::size_t n = data.size();
    if (!is_power_of_two(n)) throw domain_error("transform length must be a power of two");
    if (levels < 0 || (n >> levels) < 1 || (std::size_t{1} << levels) > n)
        throw domain_error("too many transform levels for the length");
    const auto g = quadrature_mirror(h);
    std::vector<double> out(n);
    std::vector<double> a(data.begin(), data.end()), approx, detail;
    std::size_t len = n;
    for (int l = 0; l < levels; ++l) {
        analysis_step(a, h, g, approx, detail);
        len /= 2;
        std::copy(detail.begin(), detail.end(), out.begin() + static_cast<long>(len));
        a = approx;
    }
    std::copy(a.begin(), a.end(), out.begin());
    return out;
}

std::vector<double> dwt_inverse(std::span<const double> packed, const std::vector<double>& h,
                                int levels) {
    const std::size_t n = packed.size();
    if (!is_power_of_two(n)) throw domain_error("transform length must be a power of two");
    if (levels < 0 || (std::size_t{1} << levels) > n)
        throw domain_error("too many transform levels for the length");
    const auto g = quadrature_mirror(h);
    std::size_t len = n >> levels;
    std::vector<double> a(packed.begin(), packed.begin() + static_cast<long>(len)), next;
    for (int l = 0; l < levels; ++l) {
        synthesis_step(a, packed.subspan(len, len), h, g, next);
        a = next;
        len *= 2;
    }
    return a;
}

CoeffPyramid dwt_pyramid(const SampledSignal& signal, const WaveletSpec& spec, ScaleWindow j_range,
                         const DwtOptions& options) {
    if (spec.family != WaveletSpec::Family::daubechies)
        throw domain_error("the filter-bank path needs a daubechies wavelet");
    const std::size_t n = signal.size();
    if (!is_power_of_two(n)) throw domain_error("filter-bank path needs a power-of-two length");
    if (j_range.empty()) throw domain_error("empty scale range");
    const int J = grid_scale(signal);
    const int m = log2_exact(n);
    if (j_range.hi > J - 1 || j_range.lo < J - m)
        throw domain_error("scale range [" + std::to_string(j_range.lo) + ", " +
                           std::to_string(j_range.hi) + "] exceeds the available octaves [" +
                           std::to_string(J - m) + ", " + std::to_string(J - 1) + "]");

    const auto& h = spec.taps;
    const auto g = quadrature_mirror(h);
    const std::size_t L = h.size();
    const auto vals = signal.values();

    // a_J[k] = <f, phi_{J,k}> ~ 2^{-J/2} sum_m phi(m) f[k+m]
    std::vector<double> a(n);
    const double norm = 1.0 / std::sqrt(std::ldexp(1.0, J));
    if (options.prefilter) {
        const auto phi = scaling_integer_values(h);
        for (std::size_t k = 0; k < n; ++k) {
            double acc = 0.0;
            for (std::size_t t = 0; t < phi.size(); ++t) acc += phi[t] * vals[(k + t) % n];
            a[k] = norm * acc;
        }
    } else {
        for (std::size_t k = 0; k < n; ++k) a[k] = norm * vals[k];
    }
    const std::size_t reach = options.prefilter ? L - 1 : 0;

    std::vector<ScaleCoeffs> scales(static_cast<std::size_t>(j_range.hi - j_range.lo + 1));
    std::vector<double> approx, detail;
    for (int j = J - 1; j >= j_range.lo; --j) {
        analysis_step(a, h, g, approx, detail);
        if (j <= j_range.hi) {
            ScaleCoeffs& sc = scales[static_cast<std::size_t>(j - j_range.lo)];
            sc.j = j;
            sc.k_first = 0;
            sc.k_stride = 1;
            const double up = std::sqrt(std::ldexp(1.0, j));
            const std::size_t stride = std::size_t{1} << (J - j);
            sc.coeffs.resize(detail.size());
            sc.excluded.assign(detail.size(), 0);
            for (std::size_t k = 0; k < detail.size(); ++k) {
                sc.coeffs[k] = up * detail[k];
                const std::size_t last = (k + L - 1) * stride + reach;
                if (options.exclude_seam && last >= n) sc.excluded[k] = 1;
            }
        }
        a = approx;
    }
    return CoeffPyramid(std::move(scales));
}

RenderedFunction rendered_wavelet(const WaveletSpec& spec, int points_per_unit) {
    if (spec.family == WaveletSpec::Family::meyer_fourier) {
        if (points_per_unit == 128) return meyer_psi_table();
        return meyer_psi_render(40.0, points_per_unit);
    }
    const int levels = log2_exact(static_cast<std::size_t>(std::max(1, points_per_unit)));
    if ((1 << levels) != points_per_unit)
        throw domain_error("daubechies rendering needs a power-of-two resolution");
    return cascade_wavelet(spec.taps, levels);
}

CoeffPyramid quadrature_coeffs(const std::function<double(double)>& f, const WaveletSpec& spec,
                               const std::vector<PositionRange>& positions,
                               const QuadratureOptions& options) {
    if (options.points_per_unit < 16)
        throw accuracy_error("quadrature needs at least 16 points per wavelet oscillation");
    for (const auto& pr : positions) {
        if (options.f_bandwidth <= 0.0) continue;
        // samples per period of the fastest component of f, in wavelet coordinates
        const double per_period =
            options.points_per_unit * 2.0 * std::numbers::pi * std::ldexp(1.0, pr.j) /
            options.f_bandwidth;
        if (per_period < 16.0)
            throw accuracy_error("quadrature resolution below 16 points per oscillation of f at scale " +
                                 std::to_string(pr.j));
    }
    const int ppu = spec.family == WaveletSpec::Family::meyer_fourier ? 128 : options.points_per_unit;
    const RenderedFunction psi = rendered_wavelet(spec, ppu);

    std::vector<ScaleCoeffs> out;
    for (const auto& pr : positions) {
        if (!out.empty() && pr.j != out.back().j + 1)
            throw domain_error("quadrature scales must be consecutive");
        ScaleCoeffs sc;
        sc.j = pr.j;
        sc.k_first = pr.k_first;
        sc.k_stride = pr.k_stride;
        sc.coeffs.resize(static_cast<std::size_t>(std::max(0L, pr.count)));
        const double inv = std::ldexp(1.0, -pr.j);
        for (long i = 0; i < pr.count; ++i) {
            const double k = static_cast<double>(pr.k_first + i * pr.k_stride);
            // ∫ f((y + k) / 2^j) psi(y) dy, trapezoid on the rendering grid
            double acc = 0.0;
            const std::size_t cnt = psi.values.size();
            for (std::size_t t = 0; t < cnt; ++t) {
                const double y = psi.x_min + static_cast<double>(t) * psi.step;
                const double w = (t == 0 || t + 1 == cnt) ? 0.5 : 1.0;
                acc += w * psi.values[t] * f((y + k) * inv);
            }
            sc.coeffs[static_cast<std::size_t>(i)] = acc * psi.step;
        }
        out.push_back(std::move(sc));
    }
    return CoeffPyramid(std::move(out));
}

} // namespace holder
