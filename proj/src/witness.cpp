#include "holder/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holder/errors.hpp"

namespace holder {
namespace {

bool below(double lhs, double rhs) { return lhs <= rhs * (1.0 + witness_tolerance); }

int first_scale(const CoeffPyramid& p, const WitnessOptions& o) {
    const int j0 = o.j0.value_or(std::max(p.j_min(), 0));
    if (j0 < p.j_min() || j0 > p.j_max())
        throw domain_error("witness start scale outside the pyramid");
    return j0;
}

} // namespace

std::optional<ScaleSequence> weak_holder_witness(const CoeffPyramid& pyramid, double alpha, int M,
                                                 double C, const WitnessOptions& options) {
    if (!(C > 0.0)) throw domain_error("witness constant C must be positive");
    if (pyramid.empty()) throw domain_error("empty pyramid");
    const int j0 = first_scale(pyramid, options);
    const CriterionTrace crit = irregularity_criterion(pyramid, M);

    std::vector<long> admissible, live;
    for (int j = j0; j <= pyramid.j_max(); ++j) {
        if (!below(crit.at(j), C * std::exp2(-alpha * j))) continue;
        admissible.push_back(j);
        if (pyramid.sup(j) > 0.0) live.push_back(j);
    }
    const std::size_t need = std::max<std::size_t>(1, options.min_heads);
    std::vector<long> heads = live.size() >= need ? live : admissible;
    if (heads.size() < need) return std::nullopt;
    ScaleSequence seq(std::move(heads));
    if (!verify_witness(pyramid, seq, alpha, M, C, j0)) return std::nullopt;
    return seq;
}

bool verify_witness(const CoeffPyramid& pyramid, const ScaleSequence& heads, double alpha, int M,
                    double C, int j0) {
    if (heads.empty() || heads.front() < j0 || heads.back() > pyramid.j_max()) return false;
    for (int j = j0; j <= pyramid.j_max(); ++j) {
        const double s = pyramid.sup(j);
        if (s == 0.0) continue;
        double log2_bound = std::numeric_limits<double>::infinity();
        const auto it = std::upper_bound(heads.values().begin(), heads.values().end(), j);
        if (it != heads.values().begin()) {
            const double head = static_cast<double>(*(it - 1));
            log2_bound = -head * alpha;
        }
        if (it != heads.values().end()) {
            const double next = static_cast<double>(*it);
            log2_bound = std::min(log2_bound, next * (M - alpha) - static_cast<double>(j) * M);
        }
        if (!below(s, C * std::exp2(log2_bound))) return false;
    }
    return true;
}

std::vector<double> default_c_grid() {
    std::vector<double> g;
    for (int e = -10; e <= 4; ++e) g.push_back(std::ldexp(1.0, e));
    return g;
}

EquivalenceReport criterion_equivalence_check(const CoeffPyramid& pyramid, double alpha, int M,
                                              const std::vector<double>& C_grid,
                                              const WitnessOptions& options) {
    if (C_grid.empty()) throw domain_error("empty constant grid");
    EquivalenceReport r;
    r.j0 = first_scale(pyramid, options);
    const CriterionTrace crit = irregularity_criterion(pyramid, M);
    r.c_prime = std::numeric_limits<double>::infinity();
    for (int j = r.j0; j <= pyramid.j_max(); ++j) {
        const double v = crit.at(j) * std::exp2(alpha * j);
        if (v < r.c_prime) {
            r.c_prime = v;
            r.c_prime_scale = j;
        }
    }
    r.witness_fails_for_all = true;
    r.bound_beats_grid = true;
    for (double C : C_grid) {
        EquivalenceEntry e;
        e.C = C;
        e.witness_found = weak_holder_witness(pyramid, alpha, M, C, options).has_value();
        e.criterion_bound_holds = !below(r.c_prime, C);
        e.agree = e.witness_found != e.criterion_bound_holds;
        if (!e.agree) ++r.disagreements;
        if (e.witness_found) r.witness_fails_for_all = false;
        if (!e.criterion_bound_holds) r.bound_beats_grid = false;
        r.entries.push_back(e);
    }
    r.all_agree = r.disagreements == 0 && r.witness_fails_for_all == r.bound_beats_grid;
    return r;
}

} // namespace holder
