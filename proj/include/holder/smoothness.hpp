#pragma once

#include <vector>

#include "holder/estimate.hpp"
#include "holder/signal.hpp"

namespace holder {

/// Order-M difference with step h = h_steps * dx at every admissible grid point:
/// sum_{m=0}^{M} (-1)^{M-m} C(M,m) f(x + m h).
///
/// Under Extension::periodic the result has one entry per sample; under
/// Extension::clamp only the n - M*h_steps points whose stencil stays inside
/// the window are returned. Throws domain_error when M*h_steps >= n.
std::vector<double> finite_difference(const SampledSignal& signal, int h_steps, int M);

/// max over shifts 0 < h <= r (grid multiples) and positions x of |Δ_h^M f(x)|.
double modulus_of_smoothness(const SampledSignal& signal, double r, int M);

/// ω^M sampled at r = 2^{-j}, j = j_lo..j_hi (radii decreasing).
struct ModulusProfile {
    int order_M = 1;
    std::vector<int> scales;
    std::vector<double> radii;
    std::vector<double> omega;
};

ModulusProfile modulus_profile(const SampledSignal& signal, int M, ScaleWindow j_range);

/// Largest j for which 2^{-j} still covers one grid step.
int finest_scale(const SampledSignal& signal);

IndexEstimate oracle_lower_index(const ModulusProfile& profile, ScaleWindow window,
                                 ChordRule rule = {});
IndexEstimate oracle_upper_index(const ModulusProfile& profile, ScaleWindow window,
                                 ChordRule rule = {});

inline IndexEstimate oracle_lower_index(const ModulusProfile& p, ChordRule rule = {}) {
    return oracle_lower_index(p, {p.scales.front(), p.scales.back()}, rule);
}
inline IndexEstimate oracle_upper_index(const ModulusProfile& p, ChordRule rule = {}) {
    return oracle_upper_index(p, {p.scales.front(), p.scales.back()}, rule);
}

/// Oracle indices with the order chosen as in the definition, M = [alpha] + 1:
/// start at M = min_M and raise M while the upper estimate reaches M - 0.1, up to
/// `max_M`. A nonzero `fixed_M` skips the search.
struct OracleResult {
    int M = 1;
    ModulusProfile profile;
    IndexEstimate lower;
    IndexEstimate upper;
};

OracleResult oracle_indices(const SampledSignal& signal, ScaleWindow j_range,
                            ScaleWindow fit_window, ChordRule rule = {}, int fixed_M = 0,
                            int max_M = 5, int min_M = 2);

/// Default oracle fit window inside j_range: the coarser half of the octaves,
/// without the two coarsest.
ScaleWindow default_oracle_window(ScaleWindow j_range);

/// Number of worker threads used by the brute-force modulus (HOLDER_THREADS caps it).
unsigned worker_count();

} // namespace holder
