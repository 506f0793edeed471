#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "holder/errors.hpp"
#include "holder/zoo.hpp"

using namespace holder;

namespace {

bool bit_identical(const SampledSignal& a, const SampledSignal& b) {
    return a.size() == b.size() && std::memcmp(a.values().data(), b.values().data(), a.size() * sizeof(double)) == 0;
}

} // namespace

TEST_CASE("weierstrass parameters and predicted index") {
    const Grid g{1024, 0.0, 1.0 / 512};
    CHECK(weierstrass(std::exp2(-0.5), 2, 20, g).predicted_index == doctest::Approx(0.5));
    CHECK(weierstrass(std::exp2(-0.7), 2, 20, g).predicted_index == doctest::Approx(0.7));
    CHECK(weierstrass(std::exp2(-0.3), 3, 20, g).predicted_index == doctest::Approx(0.3 / std::log2(3.0)));
    CHECK_THROWS_AS(weierstrass(1.0, 2, 10, g), domain_error);
    CHECK_THROWS_AS(weierstrass(0.5, 1, 10, g), domain_error);
    CHECK_THROWS_AS(weierstrass(0.5, 2, 0, g), domain_error);
    CHECK(std::pow(0.5, weierstrass_default_terms(0.5)) < 1e-12);
}

TEST_CASE("single-term weierstrass is a plain cosine") {
    const Grid g{1024, 0.0, 1.0 / 512};
    const auto w = weierstrass(0.5, 2, 1, g);
    CHECK_FALSE(w.warnings.empty());
    for (std::size_t i = 0; i < w.signal.size(); ++i)
        CHECK(w.signal[i] == doctest::Approx(std::cos(std::numbers::pi * w.signal.x(i))).scale(1.0).epsilon(1e-12));
}

TEST_CASE("generators are deterministic") {
    const Grid g{4096, 0.0, 1.0 / 2048};
    CHECK(bit_identical(weierstrass(0.7, 2, 30, g).signal, weierstrass(0.7, 2, 30, g).signal));
    FabeParams fp;
    CHECK(bit_identical(fabe_signal(fp, g).signal, fabe_signal(fp, g).signal));
    Cex1Params cp;
    cp.truncation_n = 2;
    const Grid cg{4096, 0.0, 1.0 / 4096};
    CHECK(bit_identical(cex1_signal(cp, cg), cex1_signal(cp, cg)));
    const auto a = gap_pyramid(0.5, alternating_pattern(20)).sup_per_scale();
    CHECK(a == gap_pyramid(0.5, alternating_pattern(20)).sup_per_scale());
}

TEST_CASE("cex1 beta closed form") {
    CHECK(cex1_beta(0.5, 0.5) == 1.0 / 3.0);
    CHECK(cex1_beta(0.6, 0.5) == doctest::Approx(3.0 / 7.0).epsilon(1e-15));
    CHECK(cex1_beta(0.4, 1.0 - 1e-12) == doctest::Approx(0.4).epsilon(1e-9));
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(1e-6, 1.0 - 1e-6);
    for (int i = 0; i < 1000; ++i) {
        const double a = u(rng), e = u(rng);
        CHECK(cex1_beta(a, e) < a);
    }
    CHECK_THROWS_AS(cex1_beta(0.0, 0.5), domain_error);
    CHECK_THROWS_AS(cex1_beta(0.5, 1.0), domain_error);
}

TEST_CASE("cex1 head recursion") {
    const auto s = cex1_sequences(0.5, 3, 6);
    CHECK(s.j == std::vector<long>{3, 4, 6, 13, 174});
    CHECK(s.j_alpha.size() == s.j.size());
    CHECK(cex1_feasible_blocks(0.5, 3, 30) == 3);
}

TEST_CASE("cex1 truncation") {
    Cex1Params p;
    p.truncation_n = 0;
    const auto z = cex1_signal(p, Grid{1024, 0.0, 1.0 / 1024});
    for (double v : z.values()) CHECK(v == 0.0);

    p.truncation_n = 4;
    try {
        Cex1Function f(p);
        FAIL("expected truncation_error");
    } catch (const truncation_error& e) {
        CHECK(e.feasible() == 3);
    }
    p.truncation_n = 3;
    p.vanishing_moments = 3;
    CHECK_THROWS_AS(Cex1Function{p}, domain_error);
}

TEST_CASE("cex1 shifted wavelet and probes") {
    const Cex1Function f(Cex1Params{});
    CHECK(f.psi_tilde(0.0) == doctest::Approx(f.psi0()));
    CHECK(std::abs(f.psi0()) > 1e-6);
    CHECK(f.support_lo() >= -8.0);
    CHECK(f.support_hi() <= 8.0);
    // a probe reads one block only: the full sum at x_j equals psi~(0) times the amplitudes at j
    for (const auto& pr : f.probes()) {
        CHECK(f(pr.x) == doctest::Approx(pr.value).epsilon(1e-9).scale(1e-300));
        if (pr.empty) CHECK(pr.value == 0.0);
    }
}

TEST_CASE("cex1 block supports are disjoint on the rendered grid") {
    Cex1Params p;
    p.truncation_n = 2;
    const Cex1Function f(p);
    const Grid g{1 << 16, 0.0, 1.0 / 16384};
    std::vector<int> owner(g.n, -1);
    bool overlap = false;
    for (const auto& at : f.atoms()) {
        const double xj = std::ldexp(1.0, p.ell0 - at.j);
        const double lo = xj + std::ldexp(f.support_lo(), -at.ell), hi = xj + std::ldexp(f.support_hi(), -at.ell);
        const auto i0 = static_cast<long>(std::ceil((lo - g.x0) / g.dx)), i1 = static_cast<long>(std::floor((hi - g.x0) / g.dx));
        for (long i = std::max(0L, i0); i <= std::min<long>(i1, static_cast<long>(g.n) - 1); ++i) {
            const double v = f.psi_tilde(std::ldexp(g.x0 + i * g.dx - xj, at.ell));
            if (v == 0.0) continue;
            int& o = owner[static_cast<std::size_t>(i)];
            if (o != -1 && o != at.j) overlap = true;
            o = at.j;
        }
    }
    CHECK_FALSE(overlap);
}

TEST_CASE("lacunary series layout") {
    FabeParams p;
    const auto s = fabe_series(p);
    CHECK(s.j == std::vector<long>{1, 2, 4, 8, 16});

    FabeParams one;
    one.n_max = 0;
    const auto t = fabe_series(one);
    REQUIRE(t.series.terms().size() == 1);
    CHECK(t.series.terms()[0].j == 2);

    FabeParams cut;
    cut.n_max = 4;
    cut.j_cap = 24;
    const auto c = fabe_series(cut);
    CHECK(c.j.back() == 32);
    CHECK(c.series.terms().back().j == 24);

    FabeParams too_far;
    too_far.n_max = 5;
    too_far.j_cap = 24;
    CHECK_THROWS_AS(fabe_series(too_far), truncation_error);
}

TEST_CASE("lacunary amplitudes are nonincreasing within blocks") {
    for (double g : {2.0, 1.5, 3.0}) {
        FabeParams p;
        p.beta_growth = g;
        p.n_max = 3;
        p.j_cap = 30;
        FabeSeries s;
        try {
            s = fabe_series(p);
        } catch (const domain_error&) {
            continue;
        }
        for (std::size_t n = 0; n + 1 < s.j.size(); ++n) {
            double prev = INFINITY;
            for (const auto& t : s.series.terms())
                if (t.j > s.j[n] && t.j <= s.j[n + 1]) {
                    CHECK(t.amplitude <= prev);
                    prev = t.amplitude;
                }
        }
    }
}

TEST_CASE("gap pyramids") {
    std::vector<char> all(21, 1);
    const auto p = gap_pyramid(0.3, all);
    for (int j = 0; j <= 20; ++j) CHECK(p.sup(j) == std::exp2(-0.3 * j));
    const auto a = gap_pyramid(0.5, alternating_pattern(10));
    CHECK(a.sup(1) == 0.0);
    CHECK(a.sup(2) == 0.5);
    const auto d = dyadic_heads_pattern(20);
    CHECK(d[1] == 1);
    CHECK(d[16] == 1);
    CHECK(d[3] == 0);
    CHECK_THROWS_AS(gap_pyramid(0.5, {}), domain_error);
}
