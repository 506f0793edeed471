#include "holder/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "holder/errors.hpp"

namespace holder {

ScaleSequence::ScaleSequence(std::vector<long> j) : j_(std::move(j)) {
    if (!j_.empty() && j_.front() < 0) throw domain_error("scale sequences start at j_1 >= 0");
    for (std::size_t n = 1; n < j_.size(); ++n)
        if (j_[n] <= j_[n - 1]) throw domain_error("scale sequence must be strictly increasing");
}

long ScaleSequence::block_of(long j) const {
    if (j_.size() < 2 || j < j_.front() || j >= j_.back()) return -1;
    const auto it = std::upper_bound(j_.begin(), j_.end(), j);
    return static_cast<long>(it - j_.begin()) - 1;
}

double ThetaProfile::log2_at(long j) const {
    if (j < j_lo || j > j_hi)
        throw domain_error("scale " + std::to_string(j) + " outside the theta profile");
    return log2_values[static_cast<std::size_t>(j - j_lo)];
}

double ThetaProfile::at(long j) const { return std::exp2(log2_at(j)); }

long ThetaProfile::switchover(std::size_t n) const {
    const long a = seq[n], b = seq[n + 1];
    for (long j = a; j < b; ++j) {
        const double flat = -static_cast<double>(a) * alpha;
        const double decay = static_cast<double>(b) * (M - alpha) - static_cast<double>(j) * M;
        if (decay < flat) return j;
    }
    return b;
}

ThetaProfile theta_build(const ScaleSequence& seq, double alpha, int M, long j_max) {
    if (M < 1) throw domain_error("theta order M must be at least 1");
    if (!(alpha > 0.0) || !(alpha < M))
        throw domain_error("theta needs 0 < alpha < M");
    if (seq.size() < 2 || seq.back() <= j_max || j_max < seq.front())
        throw domain_error("scale sequence must cover [j_1, j_max]");
    ThetaProfile t;
    t.alpha = alpha;
    t.M = M;
    t.seq = seq;
    t.j_lo = seq.front();
    t.j_hi = j_max;
    for (long j = t.j_lo; j <= j_max; ++j) {
        const auto n = static_cast<std::size_t>(seq.block_of(j));
        const double flat = -static_cast<double>(seq[n]) * alpha;
        const double decay =
            static_cast<double>(seq[n + 1]) * (M - alpha) - static_cast<double>(j) * M;
        t.log2_values.push_back(std::min(flat, decay));
    }
    return t;
}

bool ThetaReport::weak_pass() const {
    bool ok = monotone && doubling.pass && faible_un.pass && faible_trois.pass;
    for (const auto& c : faible_deux) ok = ok && c.pass;
    return ok;
}

namespace {

void keep_worst(ConditionResult& c, double value, long J) {
    if (c.worst_J == 0 || value > c.constant) {
        c.constant = value;
        c.worst_J = J;
    }
}

double strong_threshold(double q) { return q > 0.0 ? 4.0 / (1.0 - std::exp2(-q)) : 0.0; }

} // namespace

ThetaReport theta_properties_check(const ThetaProfile& theta, const std::vector<double>& betas,
                                   ScaleWindow J_range) {
    for (double b : betas)
        if (!(b > 1.0)) throw domain_error("beta must exceed 1");
    const long lo = std::max<long>({theta.j_lo, J_range.lo, 1});
    const long hi = std::min<long>(theta.j_hi, J_range.hi);
    if (hi < lo) throw domain_error("empty J range for the theta checks");
    const int M = theta.M;
    const double alpha = theta.alpha;
    auto lt = [&](long j) { return theta.log2_at(j); };

    ThetaReport r;
    r.monotone = true;
    r.doubling = {"doubling", 0.0, std::exp2(M), 0, false};
    for (long j = theta.j_lo + 1; j <= theta.j_hi; ++j) {
        // θ(2r)/θ(r) with r = 2^{-j}
        const double ratio = std::exp2(lt(j - 1) - lt(j));
        if (ratio < 1.0) r.monotone = false;
        keep_worst(r.doubling, ratio, j);
    }
    r.doubling.pass = r.doubling.constant <= r.doubling.threshold * (1.0 + 1e-12);

    const double weak_cap = std::exp2(M + 1);
    r.faible_un = {"faible_un", 0.0, weak_cap, 0, false};
    r.fort_un = {"fort_un", 0.0, strong_threshold(M - alpha), 0, false};
    r.fort_deux = {"fort_deux", 0.0, strong_threshold(alpha - M + 1), 0, false};
    r.faible_trois = {"faible_trois", 0.0, 1.0, 0, false};
    for (double b : betas)
        r.faible_deux.push_back({"faible_deux(beta=" + std::to_string(b).substr(0, 4) + ")", 0.0,
                                 weak_cap * b / (b - 1.0), 0, false});

    for (long J = lo; J <= hi; ++J) {
        const double lJ = lt(J);
        double head = 0.0;
        for (long j = theta.j_lo; j <= J; ++j)
            head += std::exp2(M * static_cast<double>(j - J) + lt(j) - lJ);
        keep_worst(r.faible_un, head / static_cast<double>(J), J);
        keep_worst(r.fort_un, head, J);

        double tail_strong = 0.0;
        std::vector<double> tail_weak(betas.size(), 0.0);
        for (long j = J; j <= theta.j_hi; ++j) {
            const double rel = std::exp2(lt(j) - lJ);
            tail_strong += std::exp2((M - 1) * static_cast<double>(j - J) + lt(j) - lJ);
            const double logabs = std::abs(lt(j)) * std::numbers::ln2;
            for (std::size_t b = 0; b < betas.size(); ++b)
                tail_weak[b] += rel * std::pow(logabs / static_cast<double>(j), betas[b]);
        }
        keep_worst(r.fort_deux, tail_strong, J);
        for (std::size_t b = 0; b < betas.size(); ++b)
            keep_worst(r.faible_deux[b], tail_weak[b] / std::pow(static_cast<double>(J), betas[b]), J);

        // 2^{-MJ}/θ measured against 2^{-J(M-α)}
        const double trois = -M * static_cast<double>(J) - lJ + J * (M - alpha);
        keep_worst(r.faible_trois, std::exp2(trois), J);
        r.faible_trois_last = std::exp2(-M * static_cast<double>(J) - lJ);
    }
    auto settle = [](ConditionResult& c) {
        c.pass = std::isfinite(c.constant) && c.constant <= c.threshold * (1.0 + 1e-12);
    };
    settle(r.faible_un);
    settle(r.fort_un);
    settle(r.fort_deux);
    settle(r.faible_trois);
    for (auto& c : r.faible_deux) settle(c);
    return r;
}

} // namespace holder
