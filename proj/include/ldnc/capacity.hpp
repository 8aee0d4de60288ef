#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldnc/network.hpp"

namespace ldnc {

/// The six parameter regimes, stated for normalized gains (n1 >= n2).
/// Case1..4 have n1 > n2; Case5/6 have n1 = n2. Overlapping boundary
/// conditions resolve as: n3 = n4 routes to the Case1/Case2 branch and
/// m = n1 routes to Case1 (the formulas agree on both boundaries).
enum class RegimeCase { Case1 = 1, Case2, Case3, Case4, Case5, Case6 };

std::string to_string(RegimeCase c);

struct Regime {
    RegimeCase id;
    bool swapped;  // relays were relabeled to enforce n1 >= n2
};

/// Closed-form capacity with its supporting data: the active bound
/// terms, the per-case auxiliary integer k (absent in Case5), the
/// Case1-only integer j, and the disturber-free cut bound.
struct CapacityReport {
    NetworkParams params;  // as given, before normalization
    Regime regime;
    int capacity = 0;
    std::optional<int> k;
    std::optional<int> j;
    std::vector<std::pair<std::string, int>> bound_terms;  // named, min = capacity
    int cut = 0;
};

/// Relabel relays so that n1 >= n2 (swapping (n1,n3) with (n2,n4));
/// ties keep the original labels. m is unchanged.
std::pair<NetworkParams, bool> normalize(const NetworkParams& p);

Regime classify(const NetworkParams& p);

CapacityReport capacity(const NetworkParams& p);

/// Case3 only: the rank the free block F of the construction must
/// reach, min(n4-k, n1-m, n2+n3-m-k) with k = min(n3, m).
/// Throws std::logic_error outside Case3.
int max_rank_f_target(const NetworkParams& p);

/// Optimal relay coding matrices for the regime of p. The achieved rate
/// always equals capacity(p).capacity; an internal assertion enforces
/// this. If normalization swapped the relays the returned matrices are
/// swapped back, so callers always get matrices for the original labels.
CodingScheme construct_scheme(const NetworkParams& p);

/// Location of the k x k block of G_S that the construction guarantees
/// to be lower triangular with a unit diagonal: (row offset, column
/// offset, k). Empty in Case5 (zero scheme).
struct WitnessBlock {
    std::size_t row = 0, col = 0, size = 0;
};
std::optional<WitnessBlock> triangular_witness(const NetworkParams& p);

}  // namespace ldnc
