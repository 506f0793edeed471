#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "holder/criterion.hpp"
#include "holder/estimate.hpp"
#include "holder/signal.hpp"
#include "holder/wavelet.hpp"
#include "holder/witness.hpp"

namespace holder {

inline constexpr int report_schema = 1;

struct WitnessOutcome {
    double alpha = 0.0;
    double C = 0.0;
    bool found = false;
    std::vector<long> sequence;
};

/// Everything `analyze` produces. `provenance` holds run metadata (timestamps,
/// tool version) and is left out of comparisons.
struct AnalysisReport {
    int schema = report_schema;
    nlohmann::json input = nlohmann::json::object();
    std::string wavelet;
    double regularity_gamma = 0.0;
    int M = 1;
    std::optional<int> oracle_M;
    std::optional<IndexEstimate> wavelet_lower;
    std::optional<IndexEstimate> wavelet_upper;
    std::optional<IndexEstimate> oracle_lower;
    std::optional<IndexEstimate> oracle_upper;
    std::optional<CriterionTrace> criterion;
    std::optional<NaiveSlope> naive;
    std::vector<WitnessOutcome> witness;
    std::vector<std::string> warnings;
    nlohmann::json provenance = nlohmann::json::object();

    /// True when a wavelet estimate could not be formed.
    bool degenerate() const { return !wavelet_lower || !wavelet_upper; }
};

nlohmann::json to_json(const IndexEstimate& e);
IndexEstimate estimate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CriterionTrace& t);
CriterionTrace criterion_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

/// The report JSON without its provenance block.
nlohmann::json comparable(const nlohmann::json& report);

struct AnalyzeOptions {
    std::string wavelet = "daubechies:4";
    std::optional<int> M;                    ///< criterion order; auto when empty
    std::optional<int> oracle_M;             ///< modulus order; auto when empty
    std::optional<ScaleWindow> window;       ///< wavelet fit window
    std::optional<ScaleWindow> oracle_window;
    bool oracle = true;
    bool exclude_seam = true;
    std::vector<double> witness_alphas;      ///< empty: use the upper wavelet estimate
    std::vector<double> c_grid = default_c_grid();
    ChordRule rule = {};
};

/// Wavelet and oracle estimates of a sampled signal. Estimation failures are
/// recorded as warnings and leave the matching estimate empty.
AnalysisReport analyze_signal(const SampledSignal& signal, const AnalyzeOptions& options);

/// Estimator-only analysis of a pre-built pyramid (no oracle side).
AnalysisReport analyze_pyramid(const CoeffPyramid& pyramid, const AnalyzeOptions& options);

/// Coefficients of a signal for a given wavelet: filter bank for daubechies,
/// quadrature on the interpolated samples for meyer.
CoeffPyramid signal_pyramid(const SampledSignal& signal, const WaveletSpec& spec, bool exclude_seam);

/// Scales available to the modulus oracle for any order up to `max_M`.
ScaleWindow oracle_scale_range(const SampledSignal& signal, int max_M = 5);

/// M = [alpha] + 1 style search on the criterion: start at 1 and raise M while
/// the upper estimate reaches M - 0.1 (cap 5).
int auto_criterion_order(const CoeffPyramid& pyramid, std::optional<ScaleWindow> window,
                         ChordRule rule);

} // namespace holder
