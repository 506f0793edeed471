#pragma once

#include <optional>
#include <vector>

#include "holder/criterion.hpp"
#include "holder/theta.hpp"
#include "holder/wavelet.hpp"

namespace holder {

/// Relative slack used by every inequality test in this header.
inline constexpr double witness_tolerance = 1e-12;

struct WitnessOptions {
    std::optional<int> j0;  ///< first scale considered (default: coarsest stored scale >= 0)
    std::size_t min_heads = 1;
};

/// Finite-range search for block heads j_1 < j_2 < ... in [j0, j_max] with
/// s_j <= C inf(2^{-j_n α}, 2^{(M-α) j_{n+1}} 2^{-jM}) on every block [j_n, j_{n+1}).
/// Scales before j_1 only carry the head constraint of j_1; the last block runs to
/// j_max with the flat constraint only. Heads are taken among the scales where the
/// criterion stays below C 2^{-jα}, skipping zero scales so blocks run as long as
/// possible.
std::optional<ScaleSequence> weak_holder_witness(const CoeffPyramid& pyramid, double alpha, int M,
                                                 double C, const WitnessOptions& options = {});

/// Checks the block inequalities of a candidate witness scale by scale.
bool verify_witness(const CoeffPyramid& pyramid, const ScaleSequence& heads, double alpha, int M,
                    double C, int j0);

struct EquivalenceEntry {
    double C = 0.0;
    bool witness_found = false;
    bool criterion_bound_holds = false;  ///< criterion(j) > C 2^{-jα} for every j >= j0 (C < C')
    bool agree = false;
};

struct EquivalenceReport {
    double c_prime = 0.0;      ///< min over j >= j0 of criterion(j) 2^{jα}
    int c_prime_scale = 0;
    int j0 = 0;
    std::vector<EquivalenceEntry> entries;
    bool witness_fails_for_all = false;
    bool bound_beats_grid = false;  ///< C' exceeds every grid constant
    bool all_agree = false;
    std::size_t disagreements = 0;
};

/// Default constant grid 2^-10, ..., 2^4.
std::vector<double> default_c_grid();

EquivalenceReport criterion_equivalence_check(const CoeffPyramid& pyramid, double alpha, int M,
                                              const std::vector<double>& C_grid,
                                              const WitnessOptions& options = {});

} // namespace holder
