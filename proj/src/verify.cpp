#include "holder/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "holder/criterion.hpp"
#include "holder/errors.hpp"
#include "holder/meyer.hpp"
#include "holder/report.hpp"
#include "holder/theta.hpp"
#include "holder/witness.hpp"
#include "holder/zoo.hpp"

namespace holder {

using nlohmann::json;

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

json SuiteResult::to_json() const {
    json cs = json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"measured", c.measured}});
    return {{"suite", suite}, {"pass", passed()}, {"checks", cs}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theta", "criterion-equivalence", "meyer",
                                                "cex1",  "fabe",                  "monofractal"};
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "theta") return verify_theta(seed);
    if (name == "criterion-equivalence") return verify_criterion_equivalence(seed);
    if (name == "meyer") return verify_meyer();
    if (name == "cex1") return verify_cex1();
    if (name == "fabe") return verify_fabe();
    if (name == "monofractal") return verify_monofractal();
    throw domain_error("unknown suite '" + name + "'");
}

namespace {

double ratio_spread(const std::vector<double>& r) {
    if (r.empty()) return 0.0;
    const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
    return *lo > 0.0 ? *hi / *lo : std::numeric_limits<double>::infinity();
}

json condition_json(const ConditionResult& c) {
    return {{"constant", c.constant}, {"threshold", c.threshold}, {"worst_J", c.worst_J}, {"pass", c.pass}};
}

ScaleSequence random_sequence(std::mt19937_64& rng, long j_max) {
    std::uniform_int_distribution<int> start(0, 5), style(0, 2);
    const int st = style(rng);
    std::vector<long> j{start(rng)};
    std::uniform_int_distribution<int> small(1, 6), wide(1, 30);
    std::uniform_real_distribution<double> grow(1.2, 2.5);
    while (j.back() <= j_max) {
        const long last = j.back();
        long next = last + 1;
        if (st == 0) next = last + small(rng);
        if (st == 1) next = last + wide(rng);
        if (st == 2) next = std::max(last + 1, static_cast<long>(std::ceil(static_cast<double>(last) * grow(rng))) + 1);
        j.push_back(next);
    }
    return ScaleSequence(std::move(j));
}

} // namespace

SuiteResult verify_theta(std::uint64_t seed, int sequences) {
    SuiteResult s{"theta", {}};
    std::mt19937_64 rng(seed);
    const std::vector<double> betas{1.5, 2.0};
    const long j_max = 150;

    int weak_ok = 0, doubling_ok = 0;
    double worst_un = 0.0, worst_trois = 0.0;
    std::vector<double> worst_deux(betas.size(), 0.0);
    std::uniform_int_distribution<int> order(1, 3);
    for (int i = 0; i < sequences; ++i) {
        const int M = order(rng);
        std::uniform_real_distribution<double> a(0.05, M - 0.05);
        const double alpha = a(rng);
        const ScaleSequence seq = random_sequence(rng, j_max);
        const auto th = theta_build(seq, alpha, M, j_max);
        const auto rep = theta_properties_check(th, betas, {static_cast<int>(seq.front()), static_cast<int>(j_max)});
        if (rep.weak_pass()) ++weak_ok;
        if (rep.doubling.pass && rep.monotone) ++doubling_ok;
        worst_un = std::max(worst_un, rep.faible_un.constant / rep.faible_un.threshold);
        worst_trois = std::max(worst_trois, rep.faible_trois.constant);
        for (std::size_t b = 0; b < betas.size(); ++b)
            worst_deux[b] = std::max(worst_deux[b], rep.faible_deux[b].constant / rep.faible_deux[b].threshold);
    }
    s.checks.push_back({"random sequences: doubling and monotonicity", doubling_ok == sequences,
                        {{"passed", doubling_ok}, {"total", sequences}}});
    s.checks.push_back({"random sequences: weak conditions", weak_ok == sequences,
                        {{"passed", weak_ok},
                         {"total", sequences},
                         {"faible_un_worst_fraction_of_threshold", worst_un},
                         {"faible_deux_worst_fraction_of_threshold", worst_deux},
                         {"faible_trois_worst", worst_trois}}});

    // unit gaps: θ is the power law 2^{-jα}
    {
        std::vector<long> j;
        for (long v = 0; v <= j_max + 1; ++v) j.push_back(v);
        const auto th = theta_build(ScaleSequence(j), 0.5, 1, j_max);
        const auto rep = theta_properties_check(th, betas, {1, static_cast<int>(j_max)});
        bool small = rep.faible_un.constant <= 4.0;
        for (const auto& c : rep.faible_deux) small = small && c.constant <= 4.0;
        s.checks.push_back({"unit gaps: weak conditions with C <= 2^(M+1)", rep.weak_pass() && small,
                            {{"faible_un", condition_json(rep.faible_un)},
                             {"faible_deux_1.5", condition_json(rep.faible_deux[0])},
                             {"faible_deux_2", condition_json(rep.faible_deux[1])}}});
        s.checks.push_back({"unit gaps: strong conditions", rep.strong_pass(),
                            {{"fort_un", condition_json(rep.fort_un)}, {"fort_deux", condition_json(rep.fort_deux)}}});
    }

    // the doubly exponential sequence of the first counterexample
    {
        const auto cs = cex1_sequences(0.5, 3, 5);
        const ScaleSequence seq(cs.j);
        const long top = seq.back() - 1;
        const auto th = theta_build(seq, 0.5, 1, top);
        const auto rep = theta_properties_check(th, betas, {static_cast<int>(seq.front()), static_cast<int>(top)});
        s.checks.push_back({"doubly exponential: weak conditions", rep.weak_pass(),
                            {{"sequence", cs.j},
                             {"faible_un", condition_json(rep.faible_un)},
                             {"faible_deux_1.5", condition_json(rep.faible_deux[0])},
                             {"faible_deux_2", condition_json(rep.faible_deux[1])},
                             {"faible_trois", condition_json(rep.faible_trois)}}});
        s.checks.push_back({"doubly exponential: strong condition fort_deux fails", !rep.fort_deux.pass,
                            {{"fort_deux", condition_json(rep.fort_deux)}}});

        json sw = json::array();
        bool near = true;
        for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
            const long at = th.switchover(n);
            const long ja = cs.j_alpha[n];
            const bool interior = ja > seq[n] && ja < seq[n + 1];
            const double slack = th.alpha * th.alpha * static_cast<double>(seq[n]) + 2.0;
            if (interior && std::abs(static_cast<double>(at - ja)) > slack) near = false;
            sw.push_back({{"n", n + 1}, {"switchover", at}, {"j_n_alpha", ja}, {"interior", interior}});
        }
        s.checks.push_back({"doubly exponential: switchover near j_{n,alpha}", near, {{"blocks", sw}}});
    }
    return s;
}

SuiteResult verify_criterion_equivalence(std::uint64_t seed, int pyramids) {
    SuiteResult s{"criterion-equivalence", {}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> a(0.1, 0.9), u(0.0, 1.0);
    const auto grid = default_c_grid();
    int agree = 0, fails_all = 0, found_some = 0;
    for (int i = 0; i < pyramids; ++i) {
        const double alpha = a(rng);
        std::vector<double> sups(21);
        for (int j = 0; j <= 20; ++j) sups[static_cast<std::size_t>(j)] = std::exp2(-alpha * j - 12.0 + 18.0 * u(rng));
        const auto pyr = CoeffPyramid::from_sups(0, sups);
        const auto rep = criterion_equivalence_check(pyr, alpha, 1, grid);
        if (rep.all_agree) ++agree;
        if (rep.witness_fails_for_all) ++fails_all;
        if (std::any_of(rep.entries.begin(), rep.entries.end(), [](const auto& e) { return e.witness_found; }))
            ++found_some;
    }
    s.checks.push_back({"witness failure matches the criterion bound", agree == pyramids,
                        {{"agreements", agree},
                         {"total", pyramids},
                         {"no_witness_for_any_C", fails_all},
                         {"witness_for_some_C", found_some}}});
    return s;
}

SuiteResult verify_meyer() {
    SuiteResult s{"meyer", {}};
    const double pi = std::numbers::pi;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double xi = pi + 3.0 * pi * (i + 0.5) / 1000.0;
        double sum = 0.0;
        for (int j = -12; j <= 12; ++j) sum += std::norm(meyer_psi_hat(std::ldexp(xi, -j)));
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    s.checks.push_back({"partition of unity", worst < 1e-10, {{"max_residual", worst}, {"samples", 1000}}});
    const double junction = std::abs(meyer_psi_hat(4.0 * pi / 3.0));
    s.checks.push_back({"|psi_hat(4pi/3)| = 1", std::abs(junction - 1.0) < 1e-12, {{"value", junction}}});
    s.checks.push_back({"support", meyer_psi_hat(0.0) == 0.0 && meyer_psi_hat(10.0) == 0.0 &&
                                       meyer_psi_hat(-10.0) == 0.0, json::object()});

    int worst_span = 0;
    bool consecutive = true;
    for (int j = 0; j <= 24; ++j) {
        const TrigSeries one({{j, 1.0, TrigTerm::Phase::sin}});
        std::vector<int> hit;
        for (int l = j - 8; l <= j + 8; ++l)
            if (meyer_scale_sup(one, l) > 1e-14) hit.push_back(l);
        worst_span = std::max(worst_span, static_cast<int>(hit.size()));
        for (std::size_t i = 1; i < hit.size(); ++i) consecutive = consecutive && hit[i] == hit[i - 1] + 1;
    }
    s.checks.push_back({"single sine: at most 5 consecutive scales", consecutive && worst_span <= 5,
                        {{"max_scales", worst_span}}});

    FabeParams p;
    p.n_max = 4;
    p.j_cap = 24;
    const FabeSeries fs = fabe_series(p);
    std::vector<double> first, second;
    json rows = json::array();
    const int lo = static_cast<int>(fs.j[1]), hi = 22, mid = (lo + hi) / 2;
    for (int l = lo; l <= hi; ++l) {
        const double env = fabe_envelope(fs, p.alpha, l);
        const double sup = meyer_scale_sup(fs.series, l);
        const double r = sup / env;
        (l <= mid ? first : second).push_back(r);
        rows.push_back({{"ell", l}, {"sup", sup}, {"envelope", env}, {"ratio", r}});
    }
    const double C = *std::max_element(first.begin(), first.end());
    const double later = *std::max_element(second.begin(), second.end());
    s.checks.push_back({"lacunary series: sup_k |c| <= C inf(...) with C fitted on the coarse half",
                        later <= C * (1.0 + 1e-12), {{"C", C}, {"max_ratio_fine_half", later}, {"scales", rows}}});
    return s;
}

SuiteResult verify_cex1() {
    SuiteResult s{"cex1", {}};
    Cex1Params p;
    const Cex1Function f(p);
    s.checks.push_back({"psi(0) != 0 after shift", std::abs(f.psi0()) > 1e-6,
                        {{"psi0", f.psi0()}, {"shift", f.shift()}}});
    int feasible = -1;
    try {
        Cex1Params q = p;
        q.truncation_n = p.truncation_n + 1;
        Cex1Function g(q);
    } catch (const truncation_error& e) {
        feasible = e.feasible();
    }
    s.checks.push_back({"extra block reports truncation", feasible == p.truncation_n, {{"feasible", feasible}}});

    // block supports: union over ell of x_j + 2^{-ell} supp(psi~)
    std::map<int, std::pair<double, double>> span;
    for (const auto& at : f.atoms()) {
        const double xj = std::ldexp(1.0, p.ell0 - at.j);
        const double a = xj + std::ldexp(f.support_lo(), -at.ell), b = xj + std::ldexp(f.support_hi(), -at.ell);
        auto it = span.find(at.j);
        if (it == span.end())
            span[at.j] = {a, b};
        else
            it->second = {std::min(it->second.first, a), std::max(it->second.second, b)};
    }
    bool disjoint = true;
    for (auto it = span.begin(); it != span.end(); ++it) {
        auto nx = std::next(it);
        if (nx != span.end() && nx->second.second >= it->second.first) disjoint = false;
    }
    s.checks.push_back({"block supports pairwise disjoint", disjoint, {{"blocks", span.size()}}});

    const double beta = cex1_beta(p.alpha, p.epsilon);
    const double b2 = p.alpha * p.epsilon / ((1.0 - p.alpha) + p.alpha * p.epsilon);
    std::map<char, std::vector<double>> ratios;
    std::vector<double> unified;
    json rows = json::array(), skipped = json::array();
    for (const auto& pr : f.probes()) {
        if (pr.empty) {
            skipped.push_back(pr.j);
            continue;
        }
        const double jd = pr.j;
        double bound = 0.0;
        if (pr.regime == 'a') bound = std::exp2(-jd * p.alpha * p.epsilon);
        if (pr.regime == 'b') bound = std::exp2(-jd * b2) * std::pow(jd, -p.epsilon);
        if (pr.regime == 'c') bound = std::exp2(-jd * b2);
        ratios[pr.regime].push_back(pr.value / bound);
        unified.push_back(pr.value / std::exp2(-jd * beta));
        rows.push_back({{"j", pr.j}, {"regime", std::string(1, pr.regime)}, {"value", pr.value},
                        {"ratio", pr.value / bound}});
    }
    bool stable = !ratios.empty();
    json spreads = json::object();
    for (const auto& [k, r] : ratios) {
        const double sp = ratio_spread(r);
        spreads[std::string(1, k)] = {{"C_prime", *std::min_element(r.begin(), r.end())}, {"spread", sp}};
        stable = stable && sp <= 4.0;
    }
    s.checks.push_back({"probe lower bounds with scale-stable C'", stable,
                        {{"regimes", spreads}, {"probes", rows}, {"empty_probes", skipped}}});
    const double us = ratio_spread(unified);
    s.checks.push_back({"probes against 2^{-j beta}", us <= 4.0,
                        {{"C_prime", unified.empty() ? 0.0 : *std::min_element(unified.begin(), unified.end())},
                         {"spread", us}}});
    s.checks.push_back({"cex1_beta(0.5, 0.5) = 1/3", cex1_beta(0.5, 0.5) == 1.0 / 3.0, {{"value", cex1_beta(0.5, 0.5)}}});

    const CoeffPyramid pyr = f.pyramid();
    const auto grid = default_c_grid();
    json found = json::array();
    for (double C : grid)
        if (auto w = weak_holder_witness(pyr, p.alpha, 1, C)) found.push_back({{"C", C}, {"sequence", w->values()}});
    s.checks.push_back({"weak-Hölder witness exists for some C", !found.empty(), {{"witnesses", found}}});

    const int q_lo = pyr.j_max() - (pyr.j_max() - pyr.j_min() + 1) / 4 + 1;
    bool exceed = true;
    double peak = 0.0;
    for (double C : grid) {
        bool any = false;
        for (int l = q_lo; l <= pyr.j_max(); ++l) {
            const double r = pyr.sup(l) * std::exp2(p.alpha * l);
            peak = std::max(peak, r);
            if (r > C) any = true;
        }
        exceed = exceed && any;
    }
    s.checks.push_back({"not Hölder at alpha: s_j 2^{j alpha} exceeds every grid C on the finest quarter", exceed,
                        {{"max_ratio", peak}, {"from_scale", q_lo}}});
    return s;
}

SuiteResult verify_fabe() {
    SuiteResult s{"fabe", {}};
    FabeParams p;
    p.n_max = 4;
    p.j_cap = 24;
    const FabeSeries fs = fabe_series(p);
    std::vector<double> r;
    json rows = json::array();
    for (int l = static_cast<int>(fs.j[1]) + 1; l <= 20; ++l) {
        const double v = fs.series(std::ldexp(1.0, -l));
        const double bound = std::exp2(-p.alpha * l) * std::pow(static_cast<double>(l), 1.0 - p.epsilon);
        r.push_back(v / bound);
        rows.push_back({{"ell", l}, {"f", v}, {"ratio", v / bound}});
    }
    const double sp = ratio_spread(r);
    s.checks.push_back({"f(2^-l) >= c 2^{-alpha l} l^{1-eps} with stable c", sp <= 4.0,
                        {{"c", *std::min_element(r.begin(), r.end())}, {"spread", sp}, {"values", rows}}});

    bool monotone = true;
    for (std::size_t n = 0; n + 1 < fs.j.size(); ++n) {
        double prev = std::numeric_limits<double>::infinity();
        for (const auto& t : fs.series.terms())
            if (t.j > fs.j[n] && t.j <= fs.j[n + 1]) {
                if (t.amplitude > prev) monotone = false;
                prev = t.amplitude;
            }
    }
    s.checks.push_back({"amplitudes nonincreasing within blocks", monotone, json::object()});
    return s;
}

SuiteResult verify_monofractal() {
    SuiteResult s{"monofractal", {}};
    for (double alpha : {0.3, 0.5, 0.7}) {
        const double a = std::exp2(-alpha);
        const auto w = weierstrass(a, 2, weierstrass_default_terms(a), Grid{});
        const auto rep = analyze_signal(w.signal, AnalyzeOptions{});
        json m = json::object();
        bool ok = true;
        auto check = [&](const char* name, const std::optional<IndexEstimate>& e) {
            if (!e) {
                ok = false;
                m[name] = nullptr;
                return;
            }
            m[name] = e->value;
            ok = ok && std::abs(e->value - alpha) <= 0.05;
        };
        check("wavelet_lower", rep.wavelet_lower);
        check("wavelet_upper", rep.wavelet_upper);
        check("oracle_lower", rep.oracle_lower);
        check("oracle_upper", rep.oracle_upper);
        s.checks.push_back({"weierstrass alpha=" + std::to_string(alpha).substr(0, 3) + " within 0.05", ok, m});
    }
    return s;
}

} // namespace holder
