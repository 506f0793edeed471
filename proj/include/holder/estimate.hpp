#pragma once

#include <span>
#include <string>
#include <vector>

namespace holder {

enum class EstimateMethod { oracle_lower, oracle_upper, wavelet_lower, wavelet_upper };

std::string to_string(EstimateMethod m);
EstimateMethod method_from_string(const std::string& s);

/// Inclusive range of scale indices j.
struct ScaleWindow {
    int lo = 0;
    int hi = 0;

    bool contains(int j) const noexcept { return j >= lo && j <= hi; }
    bool empty() const noexcept { return hi < lo; }
};

/// Finite-scale stand-in for liminf/limsup of log2 v(j) / (-j).
///
/// `origin` uses the literal quotient log2 v(j) / (-j). `sliding` uses the chord
/// between scales j and j + span, (log2 v(j) - log2 v(j + span)) / span, which
/// is insensitive to the multiplicative constant in front of a power law.
/// Both are exact on v(j) = 2^{-alpha j}.
struct ChordRule {
    enum class Kind { origin, sliding };
    Kind kind = Kind::sliding;
    int span = 2;

    static ChordRule origin() { return {Kind::origin, 0}; }
    static ChordRule sliding(int span = 2) { return {Kind::sliding, span}; }
};

struct LogPoint {
    int j = 0;
    double log2_value = 0.0;
};

/// An exponent with the data it was read off.
struct IndexEstimate {
    double value = 0.0;
    EstimateMethod method = EstimateMethod::oracle_lower;
    ScaleWindow fit_window;
    ChordRule rule;
    std::vector<LogPoint> logdata;   ///< nonzero points inside the window
    std::vector<int> skipped_zero;   ///< scales in the window whose magnitude was zero
    std::vector<double> chord_slopes;
    int binding_scale = 0;           ///< scale at which the min/max chord starts
    double regression_slope = 0.0;   ///< least-squares slope of log2 v against -j
    double residual = 0.0;           ///< rms residual of that fit
};

/// Builds an estimate from per-scale magnitudes v(j), j = scales[i].
/// `take_max` selects the limsup surrogate, otherwise the liminf one.
/// Zero magnitudes are skipped and logged; throws estimation_error when no
/// chord survives.
IndexEstimate chord_estimate(std::span<const int> scales, std::span<const double> magnitudes,
                             ScaleWindow window, ChordRule rule, bool take_max,
                             EstimateMethod method);

/// Least-squares slope and rms residual of y against x.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
};
LineFit least_squares(std::span<const double> x, std::span<const double> y);

} // namespace holder
