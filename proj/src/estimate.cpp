#include "holder/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "holder/errors.hpp"

namespace holder {

std::string to_string(EstimateMethod m) {
    switch (m) {
    case EstimateMethod::oracle_lower: return "oracle_lower";
    case EstimateMethod::oracle_upper: return "oracle_upper";
    case EstimateMethod::wavelet_lower: return "wavelet_lower";
    case EstimateMethod::wavelet_upper: return "wavelet_upper";
    }
    return "unknown";
}

EstimateMethod method_from_string(const std::string& s) {
    for (auto m : {EstimateMethod::oracle_lower, EstimateMethod::oracle_upper,
                   EstimateMethod::wavelet_lower, EstimateMethod::wavelet_upper})
        if (to_string(m) == s) return m;
    throw domain_error("unknown estimate method '" + s + "'");
}

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
    LineFit fit;
    const std::size_t n = x.size();
    if (n == 0 || y.size() != n) return fit;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / static_cast<double>(n));
    return fit;
}

IndexEstimate chord_estimate(std::span<const int> scales, std::span<const double> magnitudes,
                             ScaleWindow window, ChordRule rule, bool take_max,
                             EstimateMethod method) {
    if (window.empty())
        throw estimation_error("empty fit window");
    if (rule.kind == ChordRule::Kind::sliding && rule.span < 1)
        throw domain_error("sliding chord span must be positive");

    IndexEstimate est;
    est.method = method;
    est.fit_window = window;
    est.rule = rule;

    std::map<int, double> logv;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        const int j = scales[i];
        if (!window.contains(j)) continue;
        if (magnitudes[i] > 0.0) {
            const double l = std::log2(magnitudes[i]);
            logv[j] = l;
            est.logdata.push_back({j, l});
        } else {
            est.skipped_zero.push_back(j);
        }
    }

    double best = take_max ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
    for (const auto& [j, l] : logv) {
        double slope = 0.0;
        if (rule.kind == ChordRule::Kind::origin) {
            if (j == 0) continue;
            slope = l / static_cast<double>(-j);
        } else {
            auto next = logv.find(j + rule.span);
            if (next == logv.end()) continue;
            slope = (l - next->second) / static_cast<double>(rule.span);
        }
        est.chord_slopes.push_back(slope);
        if (take_max ? slope > best : slope < best) {
            best = slope;
            est.binding_scale = j;
        }
    }
    if (est.chord_slopes.empty())
        throw estimation_error("no usable chord in window [" + std::to_string(window.lo) + ", " +
                               std::to_string(window.hi) + "] after skipping zero magnitudes");
    est.value = best;

    std::vector<double> xs, ys;
    for (const auto& p : est.logdata) {
        xs.push_back(-static_cast<double>(p.j));
        ys.push_back(p.log2_value);
    }
    const LineFit fit = least_squares(xs, ys);
    est.regression_slope = fit.slope;
    est.residual = fit.residual;
    return est;
}

} // namespace holder
