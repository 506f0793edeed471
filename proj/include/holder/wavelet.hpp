#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "holder/daubechies.hpp"
#include "holder/estimate.hpp"
#include "holder/signal.hpp"

namespace holder {

/// Which mother wavelet, plus its filter taps when it has any.
struct WaveletSpec {
    enum class Family { daubechies, meyer_fourier };
    Family family = Family::daubechies;
    int vanishing_moments = 4;        ///< daubechies only
    double regularity_gamma = 1.618;  ///< Hölder smoothness of psi
    std::vector<double> taps;         ///< lowpass filter, daubechies only

    static WaveletSpec daubechies(int N);
    static WaveletSpec meyer();

    /// "daubechies:N" or "meyer"
    static WaveletSpec parse(const std::string& s);
    std::string name() const;
};

/// Coefficients at one scale. Entry i sits at translation k = k_first + i * k_stride.
struct ScaleCoeffs {
    int j = 0;
    long k_first = 0;
    long k_stride = 1;
    std::vector<double> coeffs;
    std::vector<char> excluded;  ///< 1 where a boundary seam touches the coefficient
    double sup = 0.0;            ///< max |c| over non-excluded entries
};

/// Per-scale coefficients in the L∞ normalization c_{j,k} = 2^j ∫ f ψ(2^j x - k) dx,
/// together with s_j = sup_k |c_{j,k}|.
class CoeffPyramid {
public:
    CoeffPyramid() = default;
    explicit CoeffPyramid(std::vector<ScaleCoeffs> scales);

    /// Pyramid carrying only the per-scale sups (one coefficient per scale).
    static CoeffPyramid from_sups(int j_min, std::span<const double> sups);

    int j_min() const { return scales_.front().j; }
    int j_max() const { return scales_.back().j; }
    bool empty() const noexcept { return scales_.empty(); }
    std::size_t scale_count() const noexcept { return scales_.size(); }

    const std::vector<ScaleCoeffs>& scales() const noexcept { return scales_; }
    const ScaleCoeffs& at(int j) const;
    double sup(int j) const { return at(j).sup; }

    std::vector<int> scale_indices() const;
    std::vector<double> sup_per_scale() const;

    std::string normalization() const { return "Linf"; }

    /// Recomputes every sup from its coefficients and exclusion mask.
    void refresh_sups();

private:
    std::vector<ScaleCoeffs> scales_;
};

struct DwtOptions {
    bool exclude_seam = true;  ///< drop wrap-around coefficients from s_j
    bool prefilter = true;     ///< project samples with phi(integer) weights before the first level
};

/// Periodic orthonormal filter-bank transform of a dyadic grid (dx = 2^-J, n = 2^m),
/// details rescaled by 2^{j/2} to the L∞ normalization. j_range must lie in
/// [J - m, J - 1].
CoeffPyramid dwt_pyramid(const SampledSignal& signal, const WaveletSpec& spec, ScaleWindow j_range,
                         const DwtOptions& options = {});

/// Scale index of the sample grid (J with dx = 2^-J); throws if dx is not dyadic.
int grid_scale(const SampledSignal& signal);

/// In-place style periodic orthonormal DWT on raw coefficients: output is
/// [approx (n >> levels) | detail coarsest | ... | detail finest].
std::vector<double> dwt_forward(std::span<const double> data, const std::vector<double>& h, int levels);
std::vector<double> dwt_inverse(std::span<const double> packed, const std::vector<double>& h, int levels);

/// Translations to evaluate at one scale: k_first + i * k_stride, i < count.
struct PositionRange {
    int j = 0;
    long k_first = 0;
    long k_stride = 1;
    long count = 0;
};

struct QuadratureOptions {
    int points_per_unit = 4096;  ///< resolution of the rendered wavelet
    double f_bandwidth = 0.0;    ///< highest angular frequency of f, if known (0: unknown)
};

/// Slow oracle: c_{j,k} = ∫ f((y + k) / 2^j) ψ(y) dy on the rendered wavelet
/// (daubechies by cascade, meyer by Fourier synthesis). Throws accuracy_error
/// below 16 quadrature points per oscillation.
CoeffPyramid quadrature_coeffs(const std::function<double(double)>& f, const WaveletSpec& spec,
                               const std::vector<PositionRange>& positions,
                               const QuadratureOptions& options = {});

/// The rendered mother wavelet used by the quadrature path.
RenderedFunction rendered_wavelet(const WaveletSpec& spec, int points_per_unit);

} // namespace holder
