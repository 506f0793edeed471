#include "holder/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "holder/errors.hpp"

namespace holder {

// ---- Weierstrass ----

int weierstrass_default_terms(double a) {
    if (!(a > 0.0 && a < 1.0)) throw domain_error("weierstrass amplitude ratio must lie in (0, 1)");
    return static_cast<int>(std::ceil(std::log(1e-12) / std::log(a))) + 1;
}

GeneratedSignal weierstrass(double a, int b, int n_terms, const Grid& grid) {
    if (!(a > 0.0 && a < 1.0)) throw domain_error("weierstrass amplitude ratio must lie in (0, 1)");
    if (b < 2) throw domain_error("weierstrass frequency ratio must be an integer >= 2");
    if (n_terms < 1) throw domain_error("weierstrass needs at least one term");
    std::vector<std::string> warnings;
    if (a * b <= 1.0)
        warnings.push_back("a*b <= 1: the series is C^1 and both indices are at least 1");
    if (std::pow(a, n_terms) >= 1e-12)
        warnings.push_back("a^n_terms >= 1e-12: the truncated tail is not negligible");

    const double pi = std::numbers::pi;
    auto f = [&](double x) {
        // phase of b^n x modulo 2, carried forward term by term
        double turns = std::fmod(x, 2.0);
        if (turns < 0.0) turns += 2.0;
        double amp = 1.0, acc = 0.0;
        for (int n = 0; n < n_terms; ++n) {
            acc += amp * std::cos(pi * turns);
            amp *= a;
            turns = std::fmod(turns * b, 2.0);
        }
        return acc;
    };
    GeneratedSignal out{sample(f, grid.n, grid.x0, grid.dx, grid.extension),
                        n_terms == 1 ? 0.0 : -std::log(a) / std::log(static_cast<double>(b)),
                        std::move(warnings)};
    if (n_terms == 1) out.warnings.push_back("single term: the signal is smooth");
    return out;
}

// ---- first counterexample ----

Cex1Sequences cex1_sequences(double alpha, int ell0, std::size_t count, long limit) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw domain_error("alpha must lie in (0, 1)");
    if (ell0 < 0) throw domain_error("ell0 must be nonnegative");
    Cex1Sequences s;
    long j = ell0;
    while (s.j.size() < count) {
        const double grow = std::exp2(static_cast<double>(j) * alpha);
        s.j.push_back(j);
        s.j_alpha.push_back(grow < static_cast<double>(limit) ? static_cast<long>(std::floor(grow)) : limit);
        const double next = std::floor(grow / (1.0 - alpha) - static_cast<double>(j) * alpha);
        if (!(next <= static_cast<double>(limit))) break;
        if (static_cast<long>(next) <= j)
            throw domain_error("cex1 recursion is not increasing for these parameters");
        j = static_cast<long>(next);
    }
    return s;
}

int cex1_feasible_blocks(double alpha, int ell0, int frequency_cap) {
    const auto s = cex1_sequences(alpha, ell0, 64);
    int n = 0;
    // block n needs j_{n+1} below the cap
    while (static_cast<std::size_t>(n + 1) < s.j.size() && s.j[static_cast<std::size_t>(n + 1)] <= frequency_cap)
        ++n;
    return n;
}

double cex1_beta(double alpha, double epsilon) {
    if (!(alpha > 0.0 && alpha < 1.0) || !(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("cex1_beta needs alpha and epsilon in (0, 1)");
    const double ae = alpha * epsilon;
    return std::max(ae, ae / ((1.0 - alpha) + ae));
}

Cex1Function::Cex1Function(const Cex1Params& p) : p_(p) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0)) throw domain_error("alpha must lie in (0, 1)");
    if (!(p.epsilon > 0.0 && p.epsilon < 1.0)) throw domain_error("epsilon must lie in (0, 1)");
    if (p.truncation_n < 0) throw domain_error("truncation_n must be nonnegative");
    if (p.vanishing_moments < 4) throw domain_error("cex1 uses daubechies psi with N >= 4");
    if (p.ell0 < 1 || p.ell0 > 10) throw domain_error("ell0 must lie in 1..10");
    if (p.frequency_cap < 1 || p.frequency_cap > 40) throw domain_error("frequency cap must lie in 1..40");

    const int feasible = cex1_feasible_blocks(p.alpha, p.ell0, p.frequency_cap);
    if (p.truncation_n > feasible)
        throw truncation_error("cex1 with " + std::to_string(p.truncation_n) +
                                   " blocks exceeds the 2^" + std::to_string(p.frequency_cap) +
                                   " frequency cap; feasible blocks: " + std::to_string(feasible),
                               feasible);

    const auto h = daubechies_filter(p.vanishing_moments);
    psi_ = cascade_wavelet(h, 12);
    const int L1 = static_cast<int>(h.size()) - 1;
    const int reach = 1 << p.ell0;
    double best = 0.0;
    for (int s = std::max(0, L1 - reach); s <= std::min(L1, reach); ++s) {
        const double v = psi_(static_cast<double>(s));
        if (v > best) {
            best = v;
            shift_ = s;
        }
    }
    psi0_ = best;
    if (!(std::abs(psi0_) > 1e-6))
        throw domain_error("no integer shift gives psi(0) != 0 with support inside [-2^ell0, 2^ell0]");

    seq_ = cex1_sequences(p.alpha, p.ell0, static_cast<std::size_t>(p.truncation_n) + 1);
    const int cap = p.frequency_cap;
    const double a = p.alpha, e = p.epsilon;
    for (int n = 1; n <= p.truncation_n; ++n) {
        const auto idx = static_cast<std::size_t>(n - 1);
        const long jn = seq_.j[idx], jna = seq_.j_alpha[idx];
        const long jn1 = seq_.j[idx + 1], jn1a = seq_.j_alpha[idx + 1];
        for (long j = jn; j <= jna; ++j)
            for (long l = j + 2; l <= std::min<long>(jna, cap); ++l)
                atoms_.push_back({n, static_cast<int>(j), static_cast<int>(l), 1,
                                  std::exp2(-jn * a) * std::pow(static_cast<double>(l), -e)});
        for (long j = std::max(jna + 1, jn); j <= jn1 - 1; ++j) {
            for (long l = j + 2; l <= std::min<long>(jn1, cap); ++l)
                atoms_.push_back({n, static_cast<int>(j), static_cast<int>(l), 2,
                                  std::exp2(jn1 * (1.0 - a) - l) * std::pow(static_cast<double>(l), -e)});
            for (long l = jn1; l <= std::min<long>(jn1a, cap); ++l)
                atoms_.push_back({n, static_cast<int>(j), static_cast<int>(l), 3,
                                  std::exp2(-jn1 * a) * std::pow(static_cast<double>(l), -e)});
        }
    }
}

int Cex1Function::j_first() const { return seq_.j.empty() ? p_.ell0 : static_cast<int>(seq_.j.front()); }

int Cex1Function::j_last() const {
    if (p_.truncation_n == 0) return j_first() - 1;
    return static_cast<int>(seq_.j[static_cast<std::size_t>(p_.truncation_n)]) - 1;
}

double Cex1Function::operator()(double x) const {
    double acc = 0.0;
    for (const auto& at : atoms_) {
        const double xj = std::ldexp(1.0, p_.ell0 - at.j);
        const double u = std::ldexp(x - xj, at.ell);
        if (u < support_lo() || u > support_hi()) continue;
        acc += at.amplitude * psi_tilde(u);
    }
    return acc;
}

std::vector<Cex1Probe> Cex1Function::probes() const {
    std::vector<Cex1Probe> out;
    const double a = p_.alpha, e = p_.epsilon;
    for (int n = 1; n <= p_.truncation_n; ++n) {
        const auto idx = static_cast<std::size_t>(n - 1);
        const long jn = seq_.j[idx], jna = seq_.j_alpha[idx], jn1 = seq_.j[idx + 1];
        for (long j = jn; j < jn1; ++j) {
            Cex1Probe pr;
            pr.j = static_cast<int>(j);
            pr.block = n;
            pr.x = std::ldexp(1.0, p_.ell0 - pr.j);
            double amp = 0.0;
            bool any = false;
            for (const auto& at : atoms_)
                if (at.j == pr.j) {
                    amp += at.amplitude;
                    any = true;
                }
            pr.value = psi0_ * amp;
            pr.empty = !any;
            if (j <= jna)
                pr.regime = 'a';
            else
                pr.regime = static_cast<double>(j) <= ((1.0 - a) + a * e) * static_cast<double>(jn1) ? 'b' : 'c';
            out.push_back(pr);
        }
    }
    return out;
}

CoeffPyramid Cex1Function::pyramid(int j_min) const {
    std::map<std::pair<int, int>, double> coeff;  // (ell, j) -> coefficient
    for (const auto& at : atoms_) coeff[{at.ell, at.j}] += at.amplitude;
    std::vector<ScaleCoeffs> scales;
    for (int l = j_min; l <= p_.frequency_cap; ++l) {
        ScaleCoeffs sc;
        sc.j = l;
        for (auto it = coeff.lower_bound({l, -1}); it != coeff.end() && it->first.first == l; ++it)
            sc.coeffs.push_back(it->second);
        if (sc.coeffs.empty()) sc.coeffs.push_back(0.0);
        scales.push_back(std::move(sc));
    }
    return CoeffPyramid(std::move(scales));
}

SampledSignal cex1_signal(const Cex1Params& p, const Grid& grid) {
    const Cex1Function f(p);
    return sample(f, grid.n, grid.x0, grid.dx, grid.extension);
}

// ---- lacunary trigonometric series ----

FabeSeries fabe_series(const FabeParams& p) {
    if (!(p.alpha > 0.0 && p.alpha < 1.0)) throw domain_error("alpha must lie in (0, 1)");
    if (!(p.epsilon > 0.0 && p.epsilon < 1.0)) throw domain_error("epsilon must lie in (0, 1)");
    if (!(p.beta_growth > 1.0)) throw domain_error("growth must exceed 1");
    if (p.n_max < 0) throw domain_error("n_max must be nonnegative");
    if (p.j_cap < 1 || p.j_cap > 30) throw domain_error("frequency cap must lie in 1..30");

    FabeSeries out;
    for (int n = 0; n <= p.n_max + 1; ++n) {
        const double v = std::floor(std::pow(p.beta_growth, n));
        if (v > 1e9) break;
        const long jn = static_cast<long>(v);
        if (!out.j.empty() && jn <= out.j.back())
            throw domain_error("floor(growth^n) is not strictly increasing for this growth");
        out.j.push_back(jn);
    }
    // block n is usable when it has a term at or below the cap
    int feasible = -1;
    for (std::size_t n = 0; n + 1 < out.j.size(); ++n)
        if (out.j[n] < p.j_cap) feasible = static_cast<int>(n);
    if (out.j.size() < static_cast<std::size_t>(p.n_max) + 2 || feasible < p.n_max)
        throw truncation_error("fabe blocks beyond n = " + std::to_string(feasible) +
                                   " lie above the 2^" + std::to_string(p.j_cap) + " frequency cap",
                               feasible);

    std::vector<TrigTerm> terms;
    for (int n = 0; n <= p.n_max; ++n) {
        const long jn = out.j[static_cast<std::size_t>(n)], jn1 = out.j[static_cast<std::size_t>(n) + 1];
        for (long j = jn + 1; j <= std::min<long>(jn1, p.j_cap); ++j) {
            const double env = std::min(-static_cast<double>(jn) * p.alpha,
                                        static_cast<double>(jn1) * (1.0 - p.alpha) - static_cast<double>(j));
            terms.push_back({static_cast<int>(j), std::exp2(env) * std::pow(static_cast<double>(j), -p.epsilon),
                             TrigTerm::Phase::sin});
        }
    }
    out.series = TrigSeries(std::move(terms));
    return out;
}

FabeSignal fabe_signal(const FabeParams& p, const Grid& grid) {
    FabeSeries s = fabe_series(p);
    SampledSignal sig = sample(s.series, grid.n, grid.x0, grid.dx, grid.extension);
    return {std::move(sig), std::move(s)};
}

double fabe_envelope(const FabeSeries& s, double alpha, int ell) {
    for (std::size_t n = 0; n + 1 < s.j.size(); ++n)
        if (ell >= s.j[n] && ell < s.j[n + 1])
            return std::exp2(std::min(-static_cast<double>(s.j[n]) * alpha,
                                      static_cast<double>(s.j[n + 1]) * (1.0 - alpha) - ell));
    return 0.0;
}

// ---- synthetic lacunary pyramids ----

std::vector<char> alternating_pattern(int j_max, bool even_alive) {
    std::vector<char> alive(static_cast<std::size_t>(j_max) + 1);
    for (int j = 0; j <= j_max; ++j) alive[static_cast<std::size_t>(j)] = ((j % 2 == 0) == even_alive);
    return alive;
}

std::vector<char> dyadic_heads_pattern(int j_max) {
    std::vector<char> alive(static_cast<std::size_t>(j_max) + 1, 0);
    for (int j = 1; j <= j_max; j *= 2) alive[static_cast<std::size_t>(j)] = 1;
    return alive;
}

CoeffPyramid gap_pyramid(double envelope_alpha, const std::vector<char>& alive) {
    if (alive.empty()) throw domain_error("empty block pattern");
    std::vector<double> s(alive.size());
    for (std::size_t j = 0; j < alive.size(); ++j)
        s[j] = alive[j] ? std::exp2(-envelope_alpha * static_cast<double>(j)) : 0.0;
    return CoeffPyramid::from_sups(0, s);
}

} // namespace holder
