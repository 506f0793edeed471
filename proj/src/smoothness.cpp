#include "holder/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "holder/errors.hpp"

namespace holder {
namespace {

std::vector<double> stencil_weights(int M) {
    std::vector<double> w(static_cast<std::size_t>(M) + 1);
    double binom = 1.0;
    for (int m = 0; m <= M; ++m) {
        w[static_cast<std::size_t>(m)] = ((M - m) % 2 == 0 ? 1.0 : -1.0) * binom;
        binom = binom * (M - m) / (m + 1);
    }
    return w;
}

// Samples followed by enough wrapped copies to read M*h_max past the end.
std::vector<double> padded_values(const SampledSignal& s, std::size_t reach) {
    const std::size_t n = s.size();
    std::vector<double> v(s.values().begin(), s.values().end());
    if (s.extension() == Extension::periodic) {
        v.resize(n + reach);
        for (std::size_t i = 0; i < reach; ++i) v[n + i] = v[i % n];
    }
    return v;
}

std::size_t evaluation_points(const SampledSignal& s, std::size_t step, int M) {
    const std::size_t span = step * static_cast<std::size_t>(M);
    return s.extension() == Extension::periodic ? s.size() : s.size() - span;
}

void check_step(const SampledSignal& s, std::size_t h_steps, int M) {
    if (M < 1) throw domain_error("difference order M must be at least 1");
    if (h_steps < 1) throw domain_error("difference step must be at least one grid step");
    if (h_steps * static_cast<std::size_t>(M) >= s.size())
        throw domain_error("step " + std::to_string(h_steps) + " times order " + std::to_string(M) +
                           " reaches past the " + std::to_string(s.size()) + "-sample window");
}

double max_abs_difference(const std::vector<double>& v, std::size_t points, std::size_t h,
                          const std::vector<double>& w) {
    const int M = static_cast<int>(w.size()) - 1;
    double best = 0.0;
    if (M == 1) {
        for (std::size_t i = 0; i < points; ++i)
            best = std::max(best, std::abs(v[i + h] - v[i]));
        return best;
    }
    for (std::size_t i = 0; i < points; ++i) {
        double acc = 0.0;
        for (int m = 0; m <= M; ++m) acc += w[static_cast<std::size_t>(m)] * v[i + m * h];
        best = std::max(best, std::abs(acc));
    }
    return best;
}

// max over h in [h_from, h_to] of max_x |Δ_h^M f(x)|; shifts are dealt to
// workers round-robin and the per-worker maxima combined, which is exact.
double max_over_shifts(const SampledSignal& s, const std::vector<double>& padded,
                       std::size_t h_from, std::size_t h_to, int M) {
    if (h_to < h_from) return 0.0;
    const auto w = stencil_weights(M);
    const std::size_t count = h_to - h_from + 1;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
    std::vector<double> partial(workers, 0.0);
    auto job = [&](unsigned t) {
        double best = 0.0;
        for (std::size_t h = h_from + t; h <= h_to; h += workers)
            best = std::max(best, max_abs_difference(padded, evaluation_points(s, h, M), h, w));
        partial[t] = best;
    };
    if (workers <= 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(job, t);
        for (auto& th : pool) th.join();
    }
    return *std::max_element(partial.begin(), partial.end());
}

std::size_t steps_within(const SampledSignal& s, double r) {
    // tolerate round-off when r is an exact multiple of dx
    return static_cast<std::size_t>(std::floor(r / s.dx() * (1.0 + 1e-12)));
}

} // namespace

unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HOLDER_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return n;
}

std::vector<double> finite_difference(const SampledSignal& signal, int h_steps, int M) {
    if (h_steps < 1) throw domain_error("difference step must be at least one grid step");
    const auto h = static_cast<std::size_t>(h_steps);
    check_step(signal, h, M);
    const auto w = stencil_weights(M);
    const auto v = padded_values(signal, h * static_cast<std::size_t>(M));
    const std::size_t points = evaluation_points(signal, h, M);
    std::vector<double> out(points);
    for (std::size_t i = 0; i < points; ++i) {
        double acc = 0.0;
        for (int m = 0; m <= M; ++m) acc += w[static_cast<std::size_t>(m)] * v[i + m * h];
        out[i] = acc;
    }
    return out;
}

double modulus_of_smoothness(const SampledSignal& signal, double r, int M) {
    if (!(r >= signal.dx() * (1.0 - 1e-12)))
        throw domain_error("radius below the grid step admits no shift");
    const std::size_t h_max = std::max<std::size_t>(1, steps_within(signal, r));
    check_step(signal, h_max, M);
    const auto v = padded_values(signal, h_max * static_cast<std::size_t>(M));
    return max_over_shifts(signal, v, 1, h_max, M);
}

int finest_scale(const SampledSignal& signal) {
    return static_cast<int>(std::floor(-std::log2(signal.dx()) + 1e-9));
}

ModulusProfile modulus_profile(const SampledSignal& signal, int M, ScaleWindow j_range) {
    if (j_range.empty()) throw domain_error("empty scale range for the modulus profile");
    if (std::ldexp(1.0, -j_range.hi) < signal.dx() * (1.0 - 1e-12))
        throw domain_error("finest radius 2^-" + std::to_string(j_range.hi) +
                           " is below the grid step");
    const std::size_t h_coarse = steps_within(signal, std::ldexp(1.0, -j_range.lo));
    check_step(signal, h_coarse, M);

    ModulusProfile p;
    p.order_M = M;
    const auto count = static_cast<std::size_t>(j_range.hi - j_range.lo + 1);
    p.scales.resize(count);
    p.radii.resize(count);
    p.omega.resize(count);

    const auto v = padded_values(signal, h_coarse * static_cast<std::size_t>(M));
    // fine to coarse, so each radius only adds the shifts it newly admits
    double running = 0.0;
    std::size_t h_done = 0;
    for (int j = j_range.hi; j >= j_range.lo; --j) {
        const auto idx = static_cast<std::size_t>(j - j_range.lo);
        const double r = std::ldexp(1.0, -j);
        const std::size_t h_max = steps_within(signal, r);
        running = std::max(running, max_over_shifts(signal, v, h_done + 1, h_max, M));
        h_done = std::max(h_done, h_max);
        p.scales[idx] = j;
        p.radii[idx] = r;
        p.omega[idx] = running;
    }
    return p;
}

IndexEstimate oracle_lower_index(const ModulusProfile& profile, ScaleWindow window, ChordRule rule) {
    return chord_estimate(profile.scales, profile.omega, window, rule, false,
                          EstimateMethod::oracle_lower);
}

IndexEstimate oracle_upper_index(const ModulusProfile& profile, ScaleWindow window, ChordRule rule) {
    return chord_estimate(profile.scales, profile.omega, window, rule, true,
                          EstimateMethod::oracle_upper);
}

ScaleWindow default_oracle_window(ScaleWindow j_range) {
    ScaleWindow w{j_range.lo + 2, (j_range.lo + j_range.hi) / 2 - 1};
    if (w.hi - w.lo < 2) w = j_range;
    return w;
}

OracleResult oracle_indices(const SampledSignal& signal, ScaleWindow j_range,
                            ScaleWindow fit_window, ChordRule rule, int fixed_M, int max_M,
                            int min_M) {
    int M = fixed_M > 0 ? fixed_M : std::max(1, min_M);
    for (;;) {
        OracleResult res;
        res.M = M;
        res.profile = modulus_profile(signal, M, j_range);
        res.lower = oracle_lower_index(res.profile, fit_window, rule);
        res.upper = oracle_upper_index(res.profile, fit_window, rule);
        if (fixed_M > 0 || M >= max_M || res.upper.value < M - 0.1) return res;
        ++M;
    }
}

} // namespace holder
