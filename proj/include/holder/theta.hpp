#pragma once

#include <string>
#include <vector>

#include "holder/estimate.hpp"

namespace holder {

/// Strictly increasing scale indices j_1 < j_2 < ..., j_1 >= 0.
class ScaleSequence {
public:
    ScaleSequence() = default;
    explicit ScaleSequence(std::vector<long> j);

    const std::vector<long>& values() const noexcept { return j_; }
    std::size_t size() const noexcept { return j_.size(); }
    bool empty() const noexcept { return j_.empty(); }
    long operator[](std::size_t n) const { return j_[n]; }
    long front() const { return j_.front(); }
    long back() const { return j_.back(); }

    /// Index n of the block [j_n, j_{n+1}) holding j, or -1 when j is outside.
    long block_of(long j) const;

private:
    std::vector<long> j_;
};

/// θ(2^{-j}) = inf(2^{-j_n α}, 2^{j_{n+1}(M-α)} 2^{-jM}) for j in [j_n, j_{n+1}),
/// tabulated for j = j_1..j_max. Stored as log2 values so long blocks do not underflow.
struct ThetaProfile {
    double alpha = 0.5;
    int M = 1;
    ScaleSequence seq;
    long j_lo = 0;
    long j_hi = 0;
    std::vector<double> log2_values;

    double log2_at(long j) const;
    double at(long j) const;
    /// First j of block n where the decaying branch is the smaller one (j_{n+1} if never).
    long switchover(std::size_t n) const;
};

ThetaProfile theta_build(const ScaleSequence& seq, double alpha, int M, long j_max);

struct ConditionResult {
    std::string name;
    double constant = 0.0;   ///< measured sup over J of lhs / (rhs without C)
    double threshold = 0.0;  ///< largest constant accepted
    long worst_J = 0;
    bool pass = false;
};

/// Measured constants for the modulus properties of θ. Sums to infinity are
/// truncated at the end of the profile.
struct ThetaReport {
    bool monotone = false;
    ConditionResult doubling;              ///< θ(2r) / θ(r), threshold 2^M
    ConditionResult faible_un;
    std::vector<ConditionResult> faible_deux;  ///< one per β
    ConditionResult faible_trois;          ///< max 2^{-Mj} / θ(2^{-j}) relative to 2^{-j(M-α)}
    double faible_trois_last = 0.0;        ///< 2^{-Mj}/θ(2^{-j}) at the finest J
    ConditionResult fort_un;
    ConditionResult fort_deux;

    bool weak_pass() const;
    bool strong_pass() const { return fort_un.pass && fort_deux.pass; }
};

ThetaReport theta_properties_check(const ThetaProfile& theta, const std::vector<double>& betas,
                                   ScaleWindow J_range);

} // namespace holder
