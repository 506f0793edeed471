#include <doctest.h>

#include <cmath>
#include <random>

#include "holder/criterion.hpp"
#include "holder/errors.hpp"
#include "holder/meyer.hpp"
#include "holder/theta.hpp"
#include "holder/witness.hpp"
#include "holder/zoo.hpp"

using namespace holder;

namespace {

CoeffPyramid from_fn(int lo, int hi, auto&& s) {
    std::vector<double> v;
    for (int j = lo; j <= hi; ++j) v.push_back(s(j));
    return CoeffPyramid::from_sups(lo, v);
}

// both branches of the criterion by direct double loop
struct Branches {
    double tail = 0.0, head = 0.0;
};
Branches brute_criterion(const CoeffPyramid& p, int j, int M) {
    Branches b;
    for (int l = j; l <= p.j_max(); ++l) b.tail = std::max(b.tail, p.sup(l));
    for (int l = p.j_min(); l <= j; ++l) b.head = std::max(b.head, std::exp2(static_cast<double>(M) * (l - j)) * p.sup(l));
    return b;
}

CoeffPyramid random_pyramid(std::mt19937_64& rng, double alpha, int hi) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return from_fn(0, hi, [&](int j) { return u(rng) < 0.15 ? 0.0 : std::exp2(-alpha * j - 6.0 + 12.0 * u(rng)); });
}

double theta_direct(const std::vector<long>& seq, double alpha, int M, long j) {
    for (std::size_t n = 0; n + 1 < seq.size(); ++n)
        if (j >= seq[n] && j < seq[n + 1])
            return std::min(std::exp2(-static_cast<double>(seq[n]) * alpha),
                            std::exp2(static_cast<double>(seq[n + 1]) * (M - alpha) - static_cast<double>(j) * M));
    return std::nan("");
}

} // namespace

TEST_CASE("lower index from coefficient decay") {
    const auto p = from_fn(0, 30, [](int j) { return std::exp2(-0.3 * j); });
    CHECK(lower_index_wavelet(p, {0, 30}).value == doctest::Approx(0.3).epsilon(1e-12));
    const auto q = from_fn(0, 30, [](int j) { return std::exp2(-0.3 * j) + std::exp2(-0.7 * j); });
    CHECK(std::abs(lower_index_wavelet(q, {8, 30}).value - 0.3) <= 0.02);
    const auto z = from_fn(0, 10, [](int) { return 0.0; });
    CHECK_THROWS_AS(lower_index_wavelet(z, {0, 10}), estimation_error);
}

TEST_CASE("criterion matches a direct evaluation of both branches") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto p = random_pyramid(rng, 0.6, 24);
        for (int M = 1; M <= 3; ++M) {
            const auto c = irregularity_criterion(p, M);
            REQUIRE(c.j.size() == 25);
            for (int j = 0; j <= 24; ++j) {
                const auto b = brute_criterion(p, j, M);
                const auto i = static_cast<std::size_t>(j);
                CHECK(c.tail_sup[i] == doctest::Approx(b.tail).epsilon(1e-12));
                CHECK(c.head_sup[i] == doctest::Approx(b.head).epsilon(1e-12));
                CHECK(c.value[i] == doctest::Approx(std::max(b.tail, b.head)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("criterion of power laws, zeros and alternating gaps") {
    const auto p = from_fn(0, 20, [](int j) { return std::exp2(-0.5 * j); });
    const auto c = irregularity_criterion(p, 1);
    for (int j = 0; j <= 20; ++j) CHECK(c.at(j) == doctest::Approx(std::exp2(-0.5 * j)).epsilon(1e-14));

    const auto z = irregularity_criterion(from_fn(0, 10, [](int) { return 0.0; }), 2);
    for (double v : z.value) CHECK(v == 0.0);

    const auto g = gap_pyramid(0.5, alternating_pattern(24));
    const auto cg = irregularity_criterion(g, 1);
    for (int j = 1; j < 24; j += 2) {
        const double expect = std::exp2(-(j + 1) / 2.0);
        CHECK(cg.tail_sup[static_cast<std::size_t>(j)] == doctest::Approx(expect).epsilon(1e-14));
        CHECK(cg.head_sup[static_cast<std::size_t>(j)] == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("criterion invariants on random pyramids") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> lam(0.01, 100.0);
    for (int t = 0; t < 100; ++t) {
        const auto p = random_pyramid(rng, 0.4, 20);
        const int M = 1 + t % 3;
        const auto c = irregularity_criterion(p, M);
        for (std::size_t i = 0; i < c.j.size(); ++i) {
            CHECK(c.value[i] >= p.sup(c.j[i]));
            if (i > 0) {
                CHECK(c.tail_sup[i] <= c.tail_sup[i - 1]);
                CHECK(c.head_sup[i] >= std::exp2(-M) * c.head_sup[i - 1] * (1.0 - 1e-14));
            }
        }
        const double l = lam(rng);
        auto sups = p.sup_per_scale();
        for (double& s : sups) s *= l;
        const auto q = CoeffPyramid::from_sups(0, sups);
        const auto cq = irregularity_criterion(q, M);
        for (std::size_t i = 0; i < c.j.size(); ++i) CHECK(cq.value[i] == doctest::Approx(l * c.value[i]).epsilon(1e-12));
        CHECK(upper_index_wavelet(q, M, {2, 18}).value ==
              doctest::Approx(upper_index_wavelet(p, M, {2, 18}).value).epsilon(1e-9));
    }
}

TEST_CASE("upper index from the criterion") {
    const auto p = from_fn(0, 30, [](int j) { return std::exp2(-0.4 * j); });
    CHECK(upper_index_wavelet(p, 1, {0, 30}).value == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(lower_index_wavelet(p, {0, 30}).value == doctest::Approx(0.4).epsilon(1e-12));

    const auto g = gap_pyramid(0.5, alternating_pattern(24));
    const ScaleWindow w = default_wavelet_window(g, 1);
    CHECK(std::abs(upper_index_wavelet(g, 1, w).value - 0.5) <= 0.03);
    const auto naive = naive_upper_slope(g, w);
    CHECK_FALSE(naive.representative);
    CHECK_FALSE(naive.dead_scales.empty());
    CHECK(naive.dead_scales.front() % 2 == 1);

    const auto d = gap_pyramid(0.5, dyadic_heads_pattern(32));
    CHECK(upper_index_wavelet(d, 1, {1, 29}).value > 0.5 + 0.05);
}

TEST_CASE("upper index of the lacunary series from closed-form Meyer sups") {
    FabeParams fp;
    fp.n_max = 4;
    fp.j_cap = 24;
    const auto fs = fabe_series(fp);
    const auto p = from_fn(0, 24, [&](int l) { return meyer_scale_sup(fs.series, l); });
    const auto e = upper_index_wavelet(p, 1, {8, 20});
    CHECK(std::abs(e.regression_slope - 0.5) <= 0.07);
    // inside a block the criterion follows the decaying branch, so the steepest chord is M
    CHECK(e.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("default wavelet window drops the finest M + 2 scales") {
    const auto p = from_fn(0, 20, [](int j) { return std::exp2(-0.5 * j); });
    for (int M = 1; M <= 3; ++M) CHECK(default_wavelet_window(p, M).hi == 20 - (M + 2));
}

TEST_CASE("theta values on simple sequences") {
    const std::vector<long> even{0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22};
    const auto th = theta_build(ScaleSequence(even), 0.5, 1, 20);
    for (long n = 0; n <= 10; ++n) CHECK(th.at(2 * n) == doctest::Approx(std::exp2(-static_cast<double>(n))).epsilon(1e-14));
    for (long j = 0; j <= 20; ++j) CHECK(th.at(j) == doctest::Approx(theta_direct(even, 0.5, 1, j)).epsilon(1e-14));

    CHECK_THROWS_AS(ScaleSequence({3, 3}), domain_error);
    CHECK_THROWS_AS(ScaleSequence({-1, 2}), domain_error);
    CHECK_THROWS_AS(theta_build(ScaleSequence(even), 1.5, 1, 20), domain_error);
    CHECK(ScaleSequence(even).block_of(5) == 2);
    CHECK(ScaleSequence(even).block_of(30) == -1);
}

TEST_CASE("theta switchover follows the inf") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> step(1, 12);
    for (int t = 0; t < 50; ++t) {
        std::vector<long> seq{step(rng)};
        while (seq.back() < 80) seq.push_back(seq.back() + step(rng));
        const auto th = theta_build(ScaleSequence(seq), 0.7, 2, seq.back() - 1);
        for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
            const double first = -static_cast<double>(seq[n]) * 0.7;
            const double second = static_cast<double>(seq[n + 1]) * 1.3 - static_cast<double>(seq[n]) * 2.0;
            CHECK(th.log2_at(seq[n]) == doctest::Approx(std::min(first, second)).epsilon(1e-14));
        }
    }
}

TEST_CASE("theta modulus properties") {
    SUBCASE("unit gaps satisfy the weak conditions with C <= 2^{M+1}") {
        std::vector<long> unit;
        for (long j = 0; j <= 80; ++j) unit.push_back(j);
        for (int M = 1; M <= 3; ++M) {
            const auto th = theta_build(ScaleSequence(unit), M - 0.5, M, 79);
            const auto r = theta_properties_check(th, {1.5, 2.0}, {0, 79});
            CHECK(r.weak_pass());
            CHECK(r.faible_un.constant <= std::exp2(M + 1));
            CHECK(r.strong_pass());
        }
    }
    SUBCASE("doubly exponential heads pass weak and fail the second strong condition") {
        const auto cs = cex1_sequences(0.5, 3, 5);
        const ScaleSequence seq(cs.j);
        const auto th = theta_build(seq, 0.5, 1, seq.back() - 1);
        const auto r = theta_properties_check(th, {1.5, 2.0},
                                              {static_cast<int>(seq.front()), static_cast<int>(seq.back() - 1)});
        CHECK(r.weak_pass());
        CHECK_FALSE(r.fort_deux.pass);
    }
    SUBCASE("doubling on random sequences, checked against a direct evaluation") {
        std::mt19937_64 rng(29);
        std::uniform_int_distribution<int> step(1, 20);
        for (int t = 0; t < 100; ++t) {
            std::vector<long> seq{step(rng) % 5};
            while (seq.back() < 120) seq.push_back(seq.back() + step(rng));
            const int M = 1 + t % 3;
            const double alpha = 0.1 + (M - 0.2) * (t % 7) / 7.0;
            for (long j = seq.front() + 1; j < seq.back(); ++j) {
                const double prev = theta_direct(seq, alpha, M, j - 1), cur = theta_direct(seq, alpha, M, j);
                CHECK(cur <= prev);
                CHECK(prev <= std::exp2(M) * cur * (1.0 + 1e-12));
            }
        }
    }
}

TEST_CASE("doubly exponential heads and switchover") {
    const auto cs = cex1_sequences(0.5, 3, 5);
    CHECK(cs.j == std::vector<long>{3, 4, 6, 13, 174});
    CHECK(std::vector<long>(cs.j_alpha.begin(), cs.j_alpha.begin() + 4) == std::vector<long>{2, 4, 8, 90});
    const auto th = theta_build(ScaleSequence(cs.j), 0.5, 1, 173);
    for (std::size_t n = 2; n + 1 < cs.j.size(); ++n) {
        const double slack = 0.25 * static_cast<double>(cs.j[n]) + 2.0;
        CHECK(std::abs(static_cast<double>(th.switchover(n) - cs.j_alpha[n])) <= slack);
    }
}

TEST_CASE("witness search examples") {
    const auto power = from_fn(0, 24, [](int j) { return std::exp2(-0.5 * j); });
    CHECK_FALSE(weak_holder_witness(power, 0.5, 1, 0.5).has_value());
    CHECK(weak_holder_witness(power, 0.5, 1, 1.0).has_value());

    const auto zero = from_fn(0, 24, [](int) { return 0.0; });
    for (double C : default_c_grid()) CHECK(weak_holder_witness(zero, 0.5, 1, C).has_value());

    const auto d = gap_pyramid(0.5, dyadic_heads_pattern(32));
    for (double C : {1.0, 2.0, 8.0}) {
        const auto w = weak_holder_witness(d, 0.5, 1, C);
        REQUIRE(w.has_value());
        CHECK(w->values() == std::vector<long>{1, 2, 4, 8, 16, 32});
        CHECK(verify_witness(d, *w, 0.5, 1, C, 0));
    }
    CHECK_THROWS_AS(weak_holder_witness(power, 0.5, 1, 0.0), domain_error);
}

TEST_CASE("criterion equivalence examples") {
    const auto power = from_fn(0, 20, [](int j) { return std::exp2(-0.5 * j); });
    const auto r = criterion_equivalence_check(power, 0.5, 1, default_c_grid());
    CHECK(r.c_prime == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.all_agree);
    for (const auto& e : r.entries) CHECK(e.witness_found == (e.C >= 1.0));

    const auto zero = from_fn(0, 20, [](int) { return 0.0; });
    const auto rz = criterion_equivalence_check(zero, 0.5, 1, default_c_grid());
    CHECK(rz.c_prime == 0.0);
    CHECK(rz.all_agree);
    CHECK_FALSE(rz.witness_fails_for_all);
    CHECK_THROWS_AS(criterion_equivalence_check(power, 0.5, 1, {}), domain_error);
}

TEST_CASE("witness exists exactly when C reaches min_j criterion(j) 2^{j alpha}") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> a(0.1, 0.9);
    for (int t = 0; t < 200; ++t) {
        const double alpha = a(rng);
        const auto p = random_pyramid(rng, alpha, 20);
        double cp = std::numeric_limits<double>::infinity();
        for (int j = 0; j <= 20; ++j) {
            const auto b = brute_criterion(p, j, 1);
            cp = std::min(cp, std::max(b.tail, b.head) * std::exp2(alpha * j));
        }
        for (double C : default_c_grid()) {
            const bool found = weak_holder_witness(p, alpha, 1, C).has_value();
            CHECK(found == (C >= cp * (1.0 - 1e-12)));
        }
    }
}
