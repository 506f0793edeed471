#pragma once

#include <vector>

#include "holder/estimate.hpp"
#include "holder/wavelet.hpp"

namespace holder {

/// Per-scale evaluation of max(sup_{l>=j} s_l, 2^{-jM} sup_{l<=j} 2^{lM} s_l)
/// over the stored scales. The tail sup stops at the finest stored scale.
struct CriterionTrace {
    int M = 1;
    std::vector<int> j;
    std::vector<double> tail_sup;
    std::vector<double> head_sup;
    std::vector<double> value;

    double at(int scale) const;
};

CriterionTrace irregularity_criterion(const CoeffPyramid& pyramid, int M);

/// min over the window of the chord slope of log2 s_j (liminf surrogate).
IndexEstimate lower_index_wavelet(const CoeffPyramid& pyramid, ScaleWindow window,
                                  ChordRule rule = {});

/// max over the window of the chord slope of log2 criterion(j) (limsup surrogate).
IndexEstimate upper_index_wavelet(const CoeffPyramid& pyramid, int M, ScaleWindow window,
                                  ChordRule rule = {});

/// The naive limsup read straight off s_j (no gap filling). Zero scales are
/// skipped, so on lacunary pyramids the chords straddle or miss the gaps.
struct NaiveSlope {
    bool representative = true;   ///< false when the window contains zero scales
    bool defined = false;         ///< false when no chord survives
    double value = 0.0;
    std::vector<int> dead_scales;
};
NaiveSlope naive_upper_slope(const CoeffPyramid& pyramid, ScaleWindow window, ChordRule rule = {});

/// Default fit window for a pyramid: drops the M+2 finest scales (tail
/// truncation) and the coarse scales left with fewer than 8 usable coefficients.
ScaleWindow default_wavelet_window(const CoeffPyramid& pyramid, int M);

} // namespace holder
