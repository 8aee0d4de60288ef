#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ldnc/network.hpp"

namespace ldnc {

struct GridMismatch {
    NetworkParams params;
    int closed_form = 0;
    int brute_force = 0;
};

struct VerificationReport {
    int max_gain = 0;
    int bit_budget = 0;
    std::size_t total_points = 0;
    std::vector<GridMismatch> mismatches;
    std::vector<NetworkParams> skipped;  // enumeration exceeded the bit budget
    double elapsed_seconds = 0.0;

    bool passed() const { return mismatches.empty(); }
};

/// Exhaustive maximum of achievable_rate over all effective coding
/// schemes: n3*max(n1,m) free bits for relay A and n4*max(n2,m) for
/// relay B. Returns nullopt when the total bit count exceeds bit_budget.
std::optional<int> brute_force_capacity(const NetworkParams& p, int bit_budget);

/// Compare closed-form capacity with brute force on the full grid
/// [0, max_gain]^5. Points are evaluated in parallel (jobs = 0 picks the
/// hardware concurrency); the report is assembled in grid order
/// regardless of scheduling.
VerificationReport verify_grid(int max_gain, int bit_budget, unsigned jobs = 0);

/// For every pair of subspaces of F_2^dim (dim <= 4), checks that every
/// element of S1+S2 decomposes uniquely exactly when S1 and S2 intersect
/// trivially, by enumerating all pairs, and that trivial intersection
/// agrees with rank_intersection of bases.
bool check_lemma1(int dim);

/// Seeded randomized check: for matrices F, G that agree on all but
/// their last alpha rows, rank([F G]) - rank(G) <= min(cols, alpha).
bool check_lemma2(int trials, int max_rows, int max_cols, std::uint64_t seed);

}  // namespace ldnc
