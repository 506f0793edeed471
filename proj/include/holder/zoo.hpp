#pragma once

#include <string>
#include <vector>

#include "holder/daubechies.hpp"
#include "holder/meyer.hpp"
#include "holder/signal.hpp"
#include "holder/theta.hpp"
#include "holder/wavelet.hpp"

namespace holder {

/// Sampling grid shared by the generators.
struct Grid {
    std::size_t n = 1 << 16;
    double x0 = 0.0;
    double dx = 1.0 / 32768.0;
    Extension extension = Extension::periodic;
};

// ---- Weierstrass-type reference ----

struct GeneratedSignal {
    SampledSignal signal;
    double predicted_index = 0.0;  ///< common lower/upper index when known
    std::vector<std::string> warnings;
};

/// Terms needed for a^n < 1e-12.
int weierstrass_default_terms(double a);

/// sum_{n < n_terms} a^n cos(b^n π x); predicted index -log a / log b.
GeneratedSignal weierstrass(double a, int b, int n_terms, const Grid& grid);

// ---- first counterexample ----

struct Cex1Params {
    double alpha = 0.5;
    double epsilon = 0.5;
    int ell0 = 3;
    int truncation_n = 3;      ///< number of blocks n = 1..truncation_n
    int vanishing_moments = 4; ///< daubechies psi, N >= 4
    int frequency_cap = 30;    ///< finest scale 2^cap
};

/// j_1 = ell0, j_{n+1} = [2^{j_n α}/(1-α) - j_n α], and j_{n,α} = floor(2^{j_n α}).
/// Stops before a head would exceed `limit`; j_{n,α} saturates at `limit`.
struct Cex1Sequences {
    std::vector<long> j;        ///< j_1, j_2, ...
    std::vector<long> j_alpha;  ///< j_{1,α}, j_{2,α}, ... (same length as j)
};
Cex1Sequences cex1_sequences(double alpha, int ell0, std::size_t count, long limit = 1L << 40);

/// One rendered atom amplitude * psi~(2^ell (x - 2^{-(j - ell0)})).
struct Cex1Atom {
    int block = 0;  ///< n
    int j = 0;      ///< position scale
    int ell = 0;    ///< dilation scale
    int part = 1;   ///< 1, 2 or 3: which of the three sums produced it
    double amplitude = 0.0;
};

/// Probe value at x_j = 2^{-(j - ell0)}: psi~(0) times the summed amplitudes.
struct Cex1Probe {
    int j = 0;
    int block = 0;
    double x = 0.0;
    double value = 0.0;
    char regime = 'a';  ///< 'a', 'b' or 'c' after the three lower-bound regimes
    bool empty = false; ///< no atom sits at this position (inner sum empty)
};

class Cex1Function {
public:
    explicit Cex1Function(const Cex1Params& p);

    const Cex1Params& params() const noexcept { return p_; }
    const Cex1Sequences& sequences() const noexcept { return seq_; }
    const std::vector<Cex1Atom>& atoms() const noexcept { return atoms_; }

    /// psi~(x) = psi(x + shift): the daubechies psi moved so that psi~(0) > 0.
    int shift() const noexcept { return shift_; }
    double psi0() const noexcept { return psi0_; }
    double psi_tilde(double x) const { return psi_(x + shift_); }
    /// Support of psi~.
    double support_lo() const noexcept { return -shift_; }
    double support_hi() const noexcept { return psi_.x_max() - shift_; }

    double operator()(double x) const;
    std::vector<Cex1Probe> probes() const;

    /// Exact L∞-normalized pyramid: atom (ell, amplitude) is the coefficient c_{ell,k}.
    CoeffPyramid pyramid(int j_min = 0) const;

    /// First and last position scale of the rendered blocks.
    int j_first() const;
    int j_last() const;

private:
    Cex1Params p_;
    Cex1Sequences seq_;
    std::vector<Cex1Atom> atoms_;
    RenderedFunction psi_;
    int shift_ = 0;
    double psi0_ = 0.0;
};

/// Largest number of blocks whose scales stay below the frequency cap.
int cex1_feasible_blocks(double alpha, int ell0, int frequency_cap);

SampledSignal cex1_signal(const Cex1Params& p, const Grid& grid);

/// max(αε, αε / ((1-α) + αε)).
double cex1_beta(double alpha, double epsilon);

// ---- lacunary trigonometric series ----

struct FabeParams {
    double alpha = 0.5;
    double epsilon = 0.5;
    double beta_growth = 2.0;
    int n_max = 3;
    int j_cap = 30;  ///< terms above 2^{j_cap} are dropped (the last block may be partial)
};

struct FabeSeries {
    std::vector<long> j;  ///< j_0, j_1, ..., j_{n_max+1}
    TrigSeries series;
};

/// j_n = floor(growth^n) and the series sum_n sum_{j=j_n+1}^{j_{n+1}}
/// inf(2^{-j_n α}, 2^{j_{n+1}(1-α)} 2^{-j}) j^{-ε} sin(2^j π x).
FabeSeries fabe_series(const FabeParams& p);

struct FabeSignal {
    SampledSignal signal;
    FabeSeries series;
};
FabeSignal fabe_signal(const FabeParams& p, const Grid& grid);

/// inf(2^{-j_n α}, 2^{j_{n+1}(1-α)} 2^{-ell}) for ell in [j_n, j_{n+1}); 0 outside the tabulated blocks.
double fabe_envelope(const FabeSeries& s, double alpha, int ell);

// ---- synthetic lacunary pyramids ----

/// alive[j] for j = 0..j_max.
std::vector<char> alternating_pattern(int j_max, bool even_alive = true);
std::vector<char> dyadic_heads_pattern(int j_max);

/// s_j = 2^{-j α} on alive scales, 0 on dead ones; one nonzero coefficient per alive scale.
CoeffPyramid gap_pyramid(double envelope_alpha, const std::vector<char>& alive);

} // namespace holder
