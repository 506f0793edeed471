#include "holder/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holder/errors.hpp"
#include "holder/smoothness.hpp"

namespace holder {

using nlohmann::json;

namespace {

json window_json(ScaleWindow w) { return json::array({w.lo, w.hi}); }
ScaleWindow window_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

json rule_json(ChordRule r) {
    if (r.kind == ChordRule::Kind::origin) return {{"kind", "origin"}};
    return {{"kind", "sliding"}, {"span", r.span}};
}

ChordRule rule_from(const json& j) {
    if (j.at("kind") == "origin") return ChordRule::origin();
    return ChordRule::sliding(j.value("span", 2));
}

json gamma_json(double g) { return std::isinf(g) ? json("inf") : json(g); }
double gamma_from(const json& j) {
    if (j.is_string()) return std::numeric_limits<double>::infinity();
    return j.get<double>();
}

template <class T>
void put_optional(json& out, const char* key, const std::optional<T>& v) {
    out[key] = v ? to_json(*v) : json(nullptr);
}

} // namespace

json to_json(const IndexEstimate& e) {
    json logdata = json::array();
    for (const auto& p : e.logdata) logdata.push_back({p.j, p.log2_value});
    return {{"value", e.value},
            {"method", to_string(e.method)},
            {"fit_window", window_json(e.fit_window)},
            {"rule", rule_json(e.rule)},
            {"logdata", logdata},
            {"skipped_zero", e.skipped_zero},
            {"chord_slopes", e.chord_slopes},
            {"binding_scale", e.binding_scale},
            {"regression_slope", e.regression_slope},
            {"residual", e.residual}};
}

IndexEstimate estimate_from_json(const json& j) {
    IndexEstimate e;
    e.value = j.at("value").get<double>();
    e.method = method_from_string(j.at("method").get<std::string>());
    e.fit_window = window_from(j.at("fit_window"));
    e.rule = rule_from(j.at("rule"));
    for (const auto& p : j.at("logdata")) e.logdata.push_back({p.at(0).get<int>(), p.at(1).get<double>()});
    e.skipped_zero = j.at("skipped_zero").get<std::vector<int>>();
    e.chord_slopes = j.at("chord_slopes").get<std::vector<double>>();
    e.binding_scale = j.at("binding_scale").get<int>();
    e.regression_slope = j.at("regression_slope").get<double>();
    e.residual = j.at("residual").get<double>();
    return e;
}

json to_json(const CriterionTrace& t) {
    return {{"M", t.M}, {"j", t.j}, {"tail_sup", t.tail_sup}, {"head_sup", t.head_sup}, {"value", t.value}};
}

CriterionTrace criterion_from_json(const json& j) {
    CriterionTrace t;
    t.M = j.at("M").get<int>();
    t.j = j.at("j").get<std::vector<int>>();
    t.tail_sup = j.at("tail_sup").get<std::vector<double>>();
    t.head_sup = j.at("head_sup").get<std::vector<double>>();
    t.value = j.at("value").get<std::vector<double>>();
    return t;
}

json to_json(const NaiveSlope& n) {
    return {{"representative", n.representative},
            {"defined", n.defined},
            {"value", n.defined ? json(n.value) : json(nullptr)},
            {"dead_scales", n.dead_scales}};
}

static NaiveSlope naive_from_json(const json& j) {
    NaiveSlope n;
    n.representative = j.at("representative").get<bool>();
    n.defined = j.at("defined").get<bool>();
    if (n.defined) n.value = j.at("value").get<double>();
    n.dead_scales = j.at("dead_scales").get<std::vector<int>>();
    return n;
}

json to_json(const AnalysisReport& r) {
    json out = {{"schema", r.schema},
                {"input", r.input},
                {"wavelet", {{"name", r.wavelet}, {"regularity_gamma", gamma_json(r.regularity_gamma)}}},
                {"M", r.M},
                {"oracle_M", r.oracle_M ? json(*r.oracle_M) : json(nullptr)}};
    json est = json::object();
    put_optional(est, "wavelet_lower", r.wavelet_lower);
    put_optional(est, "wavelet_upper", r.wavelet_upper);
    put_optional(est, "oracle_lower", r.oracle_lower);
    put_optional(est, "oracle_upper", r.oracle_upper);
    out["estimates"] = est;
    out["criterion"] = r.criterion ? to_json(*r.criterion) : json(nullptr);
    out["naive_slope"] = r.naive ? to_json(*r.naive) : json(nullptr);
    json w = json::array();
    for (const auto& o : r.witness)
        w.push_back({{"alpha", o.alpha}, {"C", o.C}, {"found", o.found}, {"sequence", o.sequence}});
    out["witness"] = w;
    out["warnings"] = r.warnings;
    out["provenance"] = r.provenance;
    return out;
}

AnalysisReport report_from_json(const json& j) {
    try {
        AnalysisReport r;
        r.schema = j.at("schema").get<int>();
        if (r.schema != report_schema)
            throw domain_error("unsupported report schema " + std::to_string(r.schema));
        r.input = j.at("input");
        r.wavelet = j.at("wavelet").at("name").get<std::string>();
        r.regularity_gamma = gamma_from(j.at("wavelet").at("regularity_gamma"));
        r.M = j.at("M").get<int>();
        if (!j.at("oracle_M").is_null()) r.oracle_M = j.at("oracle_M").get<int>();
        const auto& est = j.at("estimates");
        auto opt = [&](const char* key) -> std::optional<IndexEstimate> {
            if (est.at(key).is_null()) return std::nullopt;
            return estimate_from_json(est.at(key));
        };
        r.wavelet_lower = opt("wavelet_lower");
        r.wavelet_upper = opt("wavelet_upper");
        r.oracle_lower = opt("oracle_lower");
        r.oracle_upper = opt("oracle_upper");
        if (!j.at("criterion").is_null()) r.criterion = criterion_from_json(j.at("criterion"));
        if (!j.at("naive_slope").is_null()) r.naive = naive_from_json(j.at("naive_slope"));
        for (const auto& o : j.at("witness"))
            r.witness.push_back({o.at("alpha").get<double>(), o.at("C").get<double>(),
                                 o.at("found").get<bool>(), o.at("sequence").get<std::vector<long>>()});
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        r.provenance = j.value("provenance", json::object());
        return r;
    } catch (const json::exception& e) {
        throw domain_error(std::string("malformed report: ") + e.what());
    }
}

json comparable(const json& report) {
    json out = report;
    out.erase("provenance");
    return out;
}

CoeffPyramid signal_pyramid(const SampledSignal& signal, const WaveletSpec& spec, bool exclude_seam) {
    const int J = grid_scale(signal);
    std::size_t n = signal.size();
    if ((n & (n - 1)) != 0) throw domain_error("wavelet analysis needs a power-of-two length");
    int m = 0;
    while ((std::size_t{1} << m) < n) ++m;
    if (spec.family == WaveletSpec::Family::daubechies) {
        DwtOptions opt;
        opt.exclude_seam = exclude_seam;
        return dwt_pyramid(signal, spec, {J - m, J - 1}, opt);
    }
    // meyer: quadrature against the periodic linear interpolant of the samples
    const auto vals = signal.values();
    const double x0 = signal.x0(), dx = signal.dx();
    auto f = [&](double x) {
        const double t = (x - x0) / dx;
        const double fl = std::floor(t);
        const double frac = t - fl;
        const long nn = static_cast<long>(n);
        long i = static_cast<long>(fl) % nn;
        if (i < 0) i += nn;
        return vals[static_cast<std::size_t>(i)] * (1.0 - frac) +
               vals[static_cast<std::size_t>((i + 1) % nn)] * frac;
    };
    std::vector<PositionRange> pos;
    for (int j = J - m + 1; j <= J - 4; ++j) {
        const long count = 1L << (j - (J - m));
        const long stride = std::max(1L, count / 64);
        pos.push_back({j, 0, stride, count / stride});
    }
    if (pos.empty()) throw domain_error("signal too short for the meyer quadrature path");
    QuadratureOptions q;
    q.points_per_unit = 128;
    // shift positions so k counts from x0
    auto g = [&](double x) { return f(x + x0); };
    return quadrature_coeffs(g, spec, pos, q);
}

ScaleWindow oracle_scale_range(const SampledSignal& signal, int max_M) {
    const int fine = finest_scale(signal);
    int lo = fine;
    while (lo > -60) {
        const double h = std::floor(std::ldexp(1.0, -(lo - 1)) / signal.dx() * (1.0 + 1e-12));
        if (static_cast<double>(max_M) * h >= static_cast<double>(signal.size())) break;
        --lo;
    }
    return {lo, fine};
}

int auto_criterion_order(const CoeffPyramid& pyramid, std::optional<ScaleWindow> window,
                         ChordRule rule) {
    int M = 1;
    for (;; ++M) {
        const ScaleWindow w = window.value_or(default_wavelet_window(pyramid, M));
        double up = 0.0;
        try {
            up = upper_index_wavelet(pyramid, M, w, rule).value;
        } catch (const estimation_error&) {
            return M;
        }
        if (M >= 5 || up < M - 0.1) return M;
    }
}

namespace {

void fill_wavelet_side(AnalysisReport& r, const CoeffPyramid& pyr, const AnalyzeOptions& o) {
    r.M = o.M.value_or(auto_criterion_order(pyr, o.window, o.rule));
    const ScaleWindow w = o.window.value_or(default_wavelet_window(pyr, r.M));
    r.criterion = irregularity_criterion(pyr, r.M);
    try {
        r.wavelet_lower = lower_index_wavelet(pyr, w, o.rule);
    } catch (const estimation_error& e) {
        r.warnings.push_back(std::string("wavelet_lower: ") + e.what());
    }
    try {
        r.wavelet_upper = upper_index_wavelet(pyr, r.M, w, o.rule);
    } catch (const estimation_error& e) {
        r.warnings.push_back(std::string("wavelet_upper: ") + e.what());
    }
    r.naive = naive_upper_slope(pyr, w, o.rule);
    if (!r.naive->representative)
        r.warnings.push_back("naive coefficient slope is not representative: the window holds vanishing scales");

    std::vector<double> alphas = o.witness_alphas;
    if (alphas.empty() && r.wavelet_upper && r.wavelet_upper->value > 0.0 && r.wavelet_upper->value < r.M)
        alphas.push_back(r.wavelet_upper->value);
    for (double a : alphas)
        for (double C : o.c_grid) {
            WitnessOutcome out{a, C, false, {}};
            if (auto seq = weak_holder_witness(pyr, a, r.M, C)) {
                out.found = true;
                out.sequence = seq->values();
            }
            r.witness.push_back(std::move(out));
        }
}

} // namespace

AnalysisReport analyze_pyramid(const CoeffPyramid& pyramid, const AnalyzeOptions& options) {
    AnalysisReport r;
    r.input = {{"kind", "pyramid"}, {"j_min", pyramid.j_min()}, {"j_max", pyramid.j_max()}};
    r.wavelet = "none";
    r.regularity_gamma = 0.0;
    fill_wavelet_side(r, pyramid, options);
    return r;
}

AnalysisReport analyze_signal(const SampledSignal& signal, const AnalyzeOptions& options) {
    AnalysisReport r;
    r.input = {{"kind", "signal"},
               {"length", signal.size()},
               {"x0", signal.x0()},
               {"dx", signal.dx()},
               {"extension", to_string(signal.extension())}};
    const WaveletSpec spec = WaveletSpec::parse(options.wavelet);
    r.wavelet = spec.name();
    r.regularity_gamma = spec.regularity_gamma;
    const CoeffPyramid pyr = signal_pyramid(signal, spec, options.exclude_seam);
    fill_wavelet_side(r, pyr, options);

    if (options.oracle) {
        const ScaleWindow range = oracle_scale_range(signal);
        const ScaleWindow fit = options.oracle_window.value_or(default_oracle_window(range));
        try {
            OracleResult o = oracle_indices(signal, range, fit, options.rule, options.oracle_M.value_or(0));
            r.oracle_M = o.M;
            r.oracle_lower = std::move(o.lower);
            r.oracle_upper = std::move(o.upper);
        } catch (const estimation_error& e) {
            r.warnings.push_back(std::string("oracle: ") + e.what());
        }
    }
    const double g = spec.regularity_gamma;
    if (r.wavelet_upper && !(r.wavelet_upper->value < g))
        r.warnings.push_back("upper estimate reaches the wavelet regularity; use a smoother wavelet");
    return r;
}

} // namespace holder
