// Acceptance suite: one line per criterion, nonzero exit when any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "holder/criterion.hpp"
#include "holder/meyer.hpp"
#include "holder/report.hpp"
#include "holder/theta.hpp"
#include "holder/wavelet.hpp"
#include "holder/witness.hpp"
#include "holder/zoo.hpp"

using namespace holder;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double spread(const std::vector<double>& r) {
    const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
    return *lo > 0.0 ? *hi / *lo : std::numeric_limits<double>::infinity();
}

// max(sup_{l>=j} s_l, 2^{-jM} sup_{l<=j} 2^{lM} s_l) by direct double loop
std::vector<double> brute_criterion(const std::vector<double>& s, int M) {
    std::vector<double> out(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        double tail = 0.0, head = 0.0;
        for (std::size_t l = j; l < s.size(); ++l) tail = std::max(tail, s[l]);
        for (std::size_t l = 0; l <= j; ++l)
            head = std::max(head, std::exp2(static_cast<double>(M) * (static_cast<double>(l) - static_cast<double>(j))) * s[l]);
        out[j] = std::max(tail, head);
    }
    return out;
}

// ---- 1 ----
Outcome monofractal() {
    Outcome o{true, ""};
    for (double alpha : {0.3, 0.5, 0.7}) {
        const auto t0 = std::chrono::steady_clock::now();
        const double a = std::exp2(-alpha);
        const auto w = weierstrass(a, 2, weierstrass_default_terms(a), Grid{});
        const auto r = analyze_signal(w.signal, AnalyzeOptions{});
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        double worst = 0.0;
        bool all = true;
        for (const auto* e : {&r.wavelet_lower, &r.wavelet_upper, &r.oracle_lower, &r.oracle_upper}) {
            if (!*e) {
                all = false;
                continue;
            }
            worst = std::max(worst, std::abs((*e)->value - alpha));
        }
        const bool ok = all && worst <= 0.05 && secs < 30.0;
        o.pass = o.pass && ok;
        o.detail += fmt("a=%.1f: wl=%.3f wu=%.3f ol=%.3f ou=%.3f (%.1fs)  ", alpha,
                        r.wavelet_lower ? r.wavelet_lower->value : NAN, r.wavelet_upper ? r.wavelet_upper->value : NAN,
                        r.oracle_lower ? r.oracle_lower->value : NAN, r.oracle_upper ? r.oracle_upper->value : NAN, secs);
    }
    return o;
}

// ---- 2 ----
Outcome gap_filling() {
    const auto alive = alternating_pattern(24);
    const auto pyr = gap_pyramid(0.5, alive);
    const ScaleWindow w = default_wavelet_window(pyr, 1);
    const auto up = upper_index_wavelet(pyr, 1, w);
    const auto naive = naive_upper_slope(pyr, w);

    // independent evaluation: criterion by double loop, steepest span-2 chord over the window
    const auto crit = brute_criterion(pyr.sup_per_scale(), 1);
    double steepest = -std::numeric_limits<double>::infinity();
    for (int j = w.lo; j + 2 <= w.hi; ++j)
        steepest = std::max(steepest, (std::log2(crit[static_cast<std::size_t>(j)]) -
                                        std::log2(crit[static_cast<std::size_t>(j + 2)])) / 2.0);
    const bool ok = std::abs(up.value - 0.5) <= 0.03 && std::abs(steepest - up.value) < 1e-12 &&
                    !naive.representative && !naive.dead_scales.empty();
    return {ok, fmt("window [%d,%d] upper=%.6f oracle chord=%.6f naive representative=%s dead scales=%zu", w.lo, w.hi,
                    up.value, steepest, naive.representative ? "yes" : "no", naive.dead_scales.size())};
}

// ---- 3 ----
Outcome equivalence() {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> a(0.1, 0.9), u(0.0, 1.0);
    const auto grid = default_c_grid();
    int agree = 0, none = 0;
    const int total = 1000;
    for (int i = 0; i < total; ++i) {
        const double alpha = a(rng);
        std::vector<double> s(21);
        for (int j = 0; j <= 20; ++j) s[static_cast<std::size_t>(j)] = std::exp2(-alpha * j - 12.0 + 18.0 * u(rng));
        const auto crit = brute_criterion(s, 1);
        double c_prime = std::numeric_limits<double>::infinity();
        for (int j = 0; j <= 20; ++j) c_prime = std::min(c_prime, crit[static_cast<std::size_t>(j)] * std::exp2(alpha * j));

        const auto pyr = CoeffPyramid::from_sups(0, s);
        bool ok = true, found_any = false;
        for (double C : grid) {
            const bool found = weak_holder_witness(pyr, alpha, 1, C).has_value();
            found_any = found_any || found;
            ok = ok && found == (C >= c_prime * (1.0 - witness_tolerance));
        }
        const bool fails_all = !found_any;
        const bool bound_beats_grid = c_prime * (1.0 - witness_tolerance) > grid.back();
        ok = ok && fails_all == bound_beats_grid;
        if (ok) ++agree;
        if (fails_all) ++none;
    }
    return {agree == total, fmt("%d/%d agree (%d with no witness for any grid C)", agree, total, none)};
}

// ---- 4 ----
double theta_log2(const std::vector<long>& seq, double alpha, int M, long j) {
    for (std::size_t n = 0; n + 1 < seq.size(); ++n)
        if (j >= seq[n] && j < seq[n + 1])
            return std::min(-static_cast<double>(seq[n]) * alpha,
                            static_cast<double>(seq[n + 1]) * (M - alpha) - static_cast<double>(j) * M);
    return NAN;
}

Outcome theta_properties() {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> order(1, 3), start(0, 5), style(0, 2), small(1, 6), wide(1, 30);
    std::uniform_real_distribution<double> grow(1.2, 2.5);
    const long j_max = 150;
    int doubling_ok = 0, weak_ok = 0;
    double worst_un = 0.0, worst_deux = 0.0, worst_trois = 0.0;
    for (int i = 0; i < 100; ++i) {
        const int M = order(rng);
        std::uniform_real_distribution<double> ad(0.05, M - 0.05);
        const double alpha = ad(rng);
        const int st = style(rng);
        std::vector<long> seq{start(rng)};
        while (seq.back() <= j_max) {
            const long last = seq.back();
            long next = last + (st == 0 ? small(rng) : wide(rng));
            if (st == 2) next = std::max(last + 1, static_cast<long>(std::ceil(static_cast<double>(last) * grow(rng))) + 1);
            seq.push_back(next);
        }
        const auto th = theta_build(ScaleSequence(seq), alpha, M, j_max);
        bool dbl = true;
        for (long j = seq.front() + 1; j <= j_max; ++j) {
            const double prev = theta_log2(seq, alpha, M, j - 1), cur = theta_log2(seq, alpha, M, j);
            dbl = dbl && cur <= prev + 1e-12 && prev - cur <= M + 1e-12 &&
                  std::abs(th.log2_at(j) - cur) <= 1e-9 * std::max(1.0, std::abs(cur));
        }
        if (dbl) ++doubling_ok;
        const auto rep = theta_properties_check(th, {1.5, 2.0}, {static_cast<int>(seq.front()), static_cast<int>(j_max)});
        const bool finite = std::isfinite(rep.faible_un.constant) && std::isfinite(rep.faible_trois.constant) &&
                            std::isfinite(rep.faible_deux[0].constant) && std::isfinite(rep.faible_deux[1].constant);
        if (rep.weak_pass() && finite) ++weak_ok;
        worst_un = std::max(worst_un, rep.faible_un.constant / rep.faible_un.threshold);
        worst_deux = std::max({worst_deux, rep.faible_deux[0].constant / rep.faible_deux[0].threshold,
                               rep.faible_deux[1].constant / rep.faible_deux[1].threshold});
        worst_trois = std::max(worst_trois, rep.faible_trois.constant);
    }

    const auto cs = cex1_sequences(0.5, 3, 5);
    const ScaleSequence dexp(cs.j);
    const auto th = theta_build(dexp, 0.5, 1, dexp.back() - 1);
    const auto rep = theta_properties_check(th, {1.5, 2.0}, {static_cast<int>(dexp.front()), static_cast<int>(dexp.back() - 1)});
    const bool separation = rep.weak_pass() && !rep.fort_deux.pass;
    return {doubling_ok == 100 && weak_ok == 100 && separation,
            fmt("doubling %d/100, weak conditions %d/100 (worst un %.3g, deux %.3g of threshold, trois %.3g); "
                "doubly exponential heads: weak %s, second strong condition constant %.3g vs %.3g",
                doubling_ok, weak_ok, worst_un, worst_deux, worst_trois, rep.weak_pass() ? "pass" : "fail",
                rep.fort_deux.constant, rep.fort_deux.threshold)};
}

// ---- 5 ----
Outcome lacunary_irregularity() {
    const double alpha = 0.5, eps = 0.5;
    const int cap = 24;
    std::vector<long> jn;
    for (int n = 0; n <= 5; ++n) jn.push_back(static_cast<long>(std::floor(std::pow(2.0, n))));
    // amplitudes straight from the defining formula
    std::vector<std::pair<int, long double>> terms;
    for (std::size_t n = 0; n + 1 < jn.size(); ++n)
        for (long j = jn[n] + 1; j <= std::min<long>(jn[n + 1], cap); ++j) {
            const long double env = std::min(std::exp2l(-static_cast<long double>(jn[n]) * alpha),
                                             std::exp2l(static_cast<long double>(jn[n + 1]) * (1 - alpha) - j));
            terms.push_back({static_cast<int>(j), env * std::pow(static_cast<long double>(j), -eps)});
        }

    FabeParams p;
    p.alpha = alpha;
    p.epsilon = eps;
    p.n_max = 4;
    p.j_cap = cap;
    const auto fs = fabe_series(p);
    std::vector<double> ratios;
    double lib_gap = 0.0;
    for (int l = static_cast<int>(jn[1]) + 1; l <= 20; ++l) {
        long double v = 0.0L;
        for (const auto& [j, amp] : terms)
            if (j < l) v += amp * std::sin(std::numbers::pi_v<long double> * std::ldexp(1.0L, j - l));
        const double f = static_cast<double>(v);
        lib_gap = std::max(lib_gap, std::abs(fs.series(std::ldexp(1.0, -l)) - f) / std::abs(f));
        ratios.push_back(f / (std::exp2(-alpha * l) * std::pow(static_cast<double>(l), 1.0 - eps)));
    }
    const double c = *std::min_element(ratios.begin(), ratios.end());
    const double sp = spread(ratios);
    return {c > 0.0 && sp <= 4.0 && lib_gap < 1e-9,
            fmt("l in [%ld,20]: c=%.4f spread=%.3f (limit 4), library vs direct series %.2g", jn[1] + 1, c, sp, lib_gap)};
}

// ---- 6 ----
double ramp(double x) {
    x = std::clamp(x, 0.0, 1.0);
    return std::pow(x, 4) * (35 - 84 * x + 70 * x * x - 20 * x * x * x);
}
double meyer_abs_hat(double xi) {
    xi = std::abs(xi);
    if (xi <= 2 * pi / 3 || xi >= 8 * pi / 3) return 0.0;
    if (xi <= 4 * pi / 3) return std::sin(pi / 2 * ramp(3 * xi / (2 * pi) - 1));
    return std::cos(pi / 2 * ramp(3 * xi / (4 * pi) - 1));
}

Outcome meyer_locality() {
    double pou = 0.0, hat_gap = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double xi = pi + 3 * pi * i / 999.0;
        double lib = 0.0, own = 0.0;
        for (int j = -12; j <= 12; ++j) {
            const double x = std::ldexp(xi, -j);
            lib += std::norm(meyer_psi_hat(x));
            own += meyer_abs_hat(x) * meyer_abs_hat(x);
            hat_gap = std::max(hat_gap, std::abs(std::abs(meyer_psi_hat(x)) - meyer_abs_hat(x)));
        }
        pou = std::max({pou, std::abs(lib - 1.0), std::abs(own - 1.0)});
    }

    int widest = 0;
    bool consecutive = true;
    for (int j = 0; j <= 24; ++j) {
        const TrigSeries one({{j, 1.0, TrigTerm::Phase::sin}});
        std::vector<int> hit;
        for (int l = j - 10; l <= j + 10; ++l) {
            double m = 0.0;
            for (long k = 0; k < 16; ++k) m = std::max(m, std::abs(trig_series_coeffs_meyer(one, l, k)));
            if (m > 1e-14) hit.push_back(l);
        }
        widest = std::max(widest, static_cast<int>(hit.size()));
        for (std::size_t i = 1; i < hit.size(); ++i) consecutive = consecutive && hit[i] == hit[i - 1] + 1;
    }

    FabeParams p;
    p.n_max = 4;
    p.j_cap = 24;
    const auto fs = fabe_series(p);
    const int lo = static_cast<int>(fs.j[1]), hi = 22, mid = (lo + hi) / 2;
    double C = 0.0, later = 0.0;
    for (int l = lo; l <= hi; ++l) {
        double env = 0.0;
        for (std::size_t n = 0; n + 1 < fs.j.size(); ++n)
            if (l >= fs.j[n] && l < fs.j[n + 1])
                env = std::exp2(std::min(-static_cast<double>(fs.j[n]) * p.alpha,
                                         static_cast<double>(fs.j[n + 1]) * (1 - p.alpha) - l));
        double sup = 0.0;
        for (long k = 0; k < 16; ++k) sup = std::max(sup, std::abs(trig_series_coeffs_meyer(fs.series, l, k)));
        double& slot = l <= mid ? C : later;
        slot = std::max(slot, sup / env);
    }
    const bool ok = pou < 1e-10 && hat_gap < 1e-12 && consecutive && widest <= 5 && later <= C * (1 + 1e-12);
    return {ok, fmt("partition residual %.2g, widest sine footprint %d scales, lacunary bound C=%.3f (fine half max %.3f)",
                    pou, widest, C, later)};
}

// ---- 7 ----
Outcome cex1_inequalities() {
    const double alpha = 0.5, eps = 0.5;
    const int ell0 = 3;
    // heads j_{n+1} = [2^{j_n a}/(1-a) - j_n a], j_{n,a} = [2^{j_n a}]
    std::vector<long> j{ell0}, ja;
    while (j.size() < 5) {
        const double t = std::exp2(static_cast<double>(j.back()) * alpha);
        ja.push_back(static_cast<long>(std::floor(t)));
        j.push_back(static_cast<long>(std::floor(t / (1 - alpha) - static_cast<double>(j.back()) * alpha)));
    }

    Cex1Params p;
    const Cex1Function f(p);
    const double b2 = alpha * eps / ((1 - alpha) + alpha * eps);
    std::vector<double> ra, rb, rc;
    int probed = 0, empty = 0;
    for (int n = 0; n < p.truncation_n; ++n)
        for (long s = j[static_cast<std::size_t>(n)]; s < j[static_cast<std::size_t>(n) + 1]; ++s) {
            const double x = std::ldexp(1.0, ell0 - static_cast<int>(s));
            const double v = f(x);
            if (v == 0.0) {
                ++empty;
                continue;
            }
            ++probed;
            const double sd = static_cast<double>(s);
            if (s <= ja[static_cast<std::size_t>(n)])
                ra.push_back(v / std::exp2(-sd * alpha * eps));
            else if (sd <= ((1 - alpha) + alpha * eps) * static_cast<double>(j[static_cast<std::size_t>(n) + 1]))
                rb.push_back(v / (std::exp2(-sd * b2) * std::pow(sd, -eps)));
            else
                rc.push_back(v / std::exp2(-sd * b2));
        }
    bool stable = !ra.empty();
    for (const auto* r : {&ra, &rb, &rc})
        if (!r->empty()) stable = stable && spread(*r) <= 4.0 && *std::min_element(r->begin(), r->end()) > 0.0;

    const bool beta_exact = cex1_beta(alpha, eps) == 1.0 / 3.0;

    const auto pyr = f.pyramid();
    double found_C = 0.0;
    for (double C : default_c_grid())
        if (weak_holder_witness(pyr, alpha, 1, C)) {
            found_C = C;
            break;
        }
    // s_j 2^{j alpha} must exceed every grid constant on the finest quarter of the range
    const int q_lo = pyr.j_max() - (pyr.j_max() - pyr.j_min() + 1) / 4 + 1;
    double peak = 0.0;
    for (int l = q_lo; l <= pyr.j_max(); ++l) peak = std::max(peak, pyr.sup(l) * std::exp2(alpha * l));
    const bool non_holder = peak > default_c_grid().back();

    const auto sp = [](const std::vector<double>& r) { return r.empty() ? 0.0 : spread(r); };
    return {stable && beta_exact && found_C > 0.0 && non_holder,
            fmt("%d probes (%d empty), spreads a=%.2f b=%.2f c=%.2f; beta=1/3 %s; witness from C=%g; "
                "max s_j 2^{j alpha} on scales >= %d is %.1f",
                probed, empty, sp(ra), sp(rb), sp(rc), beta_exact ? "exact" : "off", found_C, q_lo, peak)};
}

// ---- 8 ----
Outcome transform_cross_check() {
    const auto spec = WaveletSpec::daubechies(4);
    double worst = 0.0;
    std::string per;
    for (int which = 0; which < 2; ++which) {
        std::function<double(double)> f;
        if (which == 0) {
            f = [](double x) { return std::sin(pi * x) + 0.5 * std::cos(3 * pi * x + 0.3) + 0.2 * std::sin(8 * pi * x); };
        } else {
            f = [](double x) {
                double acc = 0.0, amp = 1.0, t = std::fmod(x, 2.0);
                if (t < 0) t += 2.0;
                for (int n = 0; n < 16; ++n) {
                    acc += amp * std::cos(pi * t);
                    amp *= std::sqrt(0.5);
                    t = std::fmod(2.0 * t, 2.0);
                }
                return acc;
            };
        }
        const auto sig = sample(f, 1 << 16, 0.0, 1.0 / 32768);
        const auto pyr = dwt_pyramid(sig, spec, {0, 14});
        std::vector<PositionRange> pos;
        for (int jj = 3; jj <= 12; ++jj) {
            const long nk = 1L << (jj + 1);
            const long stride = std::max(1L, nk / 32);
            pos.push_back({jj, 0, stride, (nk - 8) / stride});
        }
        const auto q = quadrature_coeffs(f, spec, pos);
        double rel = 0.0;
        for (const auto& sc : q.scales()) {
            const auto& d = pyr.at(sc.j);
            double top = 0.0, diff = 0.0;
            for (std::size_t i = 0; i < sc.coeffs.size(); ++i) {
                const auto k = static_cast<std::size_t>(sc.k_first + static_cast<long>(i) * sc.k_stride);
                if (d.excluded[k]) continue;
                top = std::max(top, std::abs(sc.coeffs[i]));
                diff = std::max(diff, std::abs(sc.coeffs[i] - d.coeffs[k]));
            }
            rel = std::max(rel, diff / top);
        }
        worst = std::max(worst, rel);
        per += fmt("%s %.2g  ", which == 0 ? "smooth" : "weierstrass", rel);
    }

    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    std::vector<double> v(1 << 14);
    for (double& x : v) x = g(rng);
    double pr = 0.0, top = 0.0;
    for (int N : {2, 4, 8}) {
        const auto h = daubechies_filter(N);
        const auto back = dwt_inverse(dwt_forward(v, h, 12), h, 12);
        for (std::size_t i = 0; i < v.size(); ++i) {
            pr = std::max(pr, std::abs(back[i] - v[i]));
            top = std::max(top, std::abs(v[i]));
        }
    }
    return {worst <= 0.02 && pr / top < 1e-10, fmt("interior sup relative gap %s(limit 0.02); reconstruction %.2g", per.c_str(), pr / top)};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        Outcome (*run)();
    };
    const Criterion all[] = {
        {1, "monofractal recovery", 90.0, monofractal},
        {2, "gap filling on lacunary pyramids", 1.0, gap_filling},
        {3, "criterion/witness equivalence", 10.0, equivalence},
        {4, "theta modulus properties", 5.0, theta_properties},
        {5, "lacunary series irregularity bound", 10.0, lacunary_irregularity},
        {6, "Meyer coefficient locality", 5.0, meyer_locality},
        {7, "first counterexample inequalities", 20.0, cex1_inequalities},
        {8, "transform cross-validation", 20.0, transform_cross_check},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = o.pass && secs < c.limit_s;
        if (!pass) ++failed;
        std::printf("[%s] %d %s (%.2fs, limit %.0fs): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                    o.detail.c_str());
    }
    std::printf("%d/8 criteria passed\n", 8 - failed);
    return failed == 0 ? 0 : 1;
}
