#include "holder/criterion.hpp"

#include <algorithm>
#include <cmath>

#include "holder/errors.hpp"

namespace holder {

double CriterionTrace::at(int scale) const {
    if (j.empty() || scale < j.front() || scale > j.back())
        throw domain_error("scale " + std::to_string(scale) + " outside the criterion trace");
    return value[static_cast<std::size_t>(scale - j.front())];
}

CriterionTrace irregularity_criterion(const CoeffPyramid& pyramid, int M) {
    if (M < 1) throw domain_error("criterion order M must be at least 1");
    CriterionTrace t;
    t.M = M;
    if (pyramid.empty()) throw domain_error("empty pyramid");
    const auto js = pyramid.scale_indices();
    const auto s = pyramid.sup_per_scale();
    const std::size_t n = js.size();
    t.j = js;
    t.tail_sup.assign(n, 0.0);
    t.head_sup.assign(n, 0.0);
    t.value.assign(n, 0.0);

    double tail = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        tail = std::max(tail, s[i]);
        t.tail_sup[i] = tail;
    }
    // head(j) = max(s_j, 2^{-M} head(j-1)): same sup, evaluated without 2^{lM} overflow
    const double step = std::ldexp(1.0, -M);
    double head = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        head = std::max(s[i], head * step);
        t.head_sup[i] = head;
        t.value[i] = std::max(t.tail_sup[i], head);
    }
    return t;
}

IndexEstimate lower_index_wavelet(const CoeffPyramid& pyramid, ScaleWindow window, ChordRule rule) {
    const auto js = pyramid.scale_indices();
    const auto s = pyramid.sup_per_scale();
    return chord_estimate(js, s, window, rule, false, EstimateMethod::wavelet_lower);
}

IndexEstimate upper_index_wavelet(const CoeffPyramid& pyramid, int M, ScaleWindow window,
                                  ChordRule rule) {
    const CriterionTrace t = irregularity_criterion(pyramid, M);
    return chord_estimate(t.j, t.value, window, rule, true, EstimateMethod::wavelet_upper);
}

NaiveSlope naive_upper_slope(const CoeffPyramid& pyramid, ScaleWindow window, ChordRule rule) {
    NaiveSlope out;
    for (const auto& sc : pyramid.scales())
        if (window.contains(sc.j) && sc.sup == 0.0) out.dead_scales.push_back(sc.j);
    out.representative = out.dead_scales.empty();
    try {
        const auto js = pyramid.scale_indices();
        const auto s = pyramid.sup_per_scale();
        out.value = chord_estimate(js, s, window, rule, true, EstimateMethod::wavelet_upper).value;
        out.defined = true;
    } catch (const estimation_error&) {
        out.defined = false;
        out.representative = false;
    }
    return out;
}

ScaleWindow default_wavelet_window(const CoeffPyramid& pyramid, int M) {
    // coarse scales keep only a handful of coefficients once the seam is dropped
    const auto& finest = pyramid.scales().back();
    const std::size_t want = std::min<std::size_t>(8, finest.coeffs.size());
    int lo = pyramid.j_max();
    for (const auto& sc : pyramid.scales()) {
        const auto kept = static_cast<std::size_t>(std::count(sc.excluded.begin(), sc.excluded.end(), 0));
        if (kept >= want) {
            lo = sc.j;
            break;
        }
    }
    ScaleWindow w{lo, pyramid.j_max() - (M + 2)};
    if (w.empty()) w = {pyramid.j_min(), pyramid.j_max()};
    return w;
}

} // namespace holder
