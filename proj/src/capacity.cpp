#include "ldnc/capacity.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldnc {

std::string to_string(RegimeCase c) {
    switch (c) {
        case RegimeCase::Case1: return "Case1";
        case RegimeCase::Case2: return "Case2";
        case RegimeCase::Case3: return "Case3";
        case RegimeCase::Case4: return "Case4";
        case RegimeCase::Case5: return "Case5";
        case RegimeCase::Case6: return "Case6";
    }
    return "?";
}

std::pair<NetworkParams, bool> normalize(const NetworkParams& p) {
    if (p.n1 >= p.n2) return {p, false};
    return {NetworkParams{p.n2, p.n1, p.n4, p.n3, p.m}, true};
}

Regime classify(const NetworkParams& p) {
    auto [np, swapped] = normalize(p);
    RegimeCase id;
    if (np.n1 == np.n2) {
        id = np.m >= np.n1 ? RegimeCase::Case5 : RegimeCase::Case6;
    } else if (np.n3 >= np.n4) {
        id = np.m <= np.n1 ? RegimeCase::Case1 : RegimeCase::Case2;
    } else {
        id = np.m <= np.n2 ? RegimeCase::Case3 : RegimeCase::Case4;
    }
    return Regime{id, swapped};
}

CapacityReport capacity(const NetworkParams& p) {
    auto [np, swapped] = normalize(p);
    const Regime regime = classify(p);
    CapacityReport rep;
    rep.params = p;
    rep.regime = regime;
    rep.cut = cut_bound(p);
    const int n1 = np.n1, n2 = np.n2, n3 = np.n3, n4 = np.n4, m = np.m;
    switch (regime.id) {
        case RegimeCase::Case1: {
            const int k = std::min(m, n4);
            rep.k = k;
            rep.j = std::min(n1 - m, n3 - k);
            rep.bound_terms = {{"n1-m+k", n1 - m + k}, {"n3", n3}};
            break;
        }
        case RegimeCase::Case2:
            rep.k = std::min(n1, n4);
            rep.bound_terms = {{"n1", n1}, {"n4", n4}};
            break;
        case RegimeCase::Case3:
            rep.k = std::min(n3, m);
            rep.bound_terms = {{"n1", n1}, {"n4", n4}, {"n2+n3-m", n2 + n3 - m}};
            break;
        case RegimeCase::Case4:
            rep.k = std::min(n1, n3);
            rep.bound_terms = {{"n1", n1}, {"n3", n3}};
            break;
        case RegimeCase::Case5:
            rep.bound_terms = {{"zero", 0}};
            break;
        case RegimeCase::Case6: {
            const int k = std::min(n1 - m, std::max(n3, n4));
            rep.k = k;
            rep.bound_terms = {{"n1-m", n1 - m}, {"max(n3,n4)", std::max(n3, n4)}};
            break;
        }
    }
    int c = rep.bound_terms.front().second;
    for (const auto& [name, v] : rep.bound_terms) c = std::min(c, v);
    rep.capacity = c;
    return rep;
}

int max_rank_f_target(const NetworkParams& p) {
    const Regime regime = classify(p);
    if (regime.id != RegimeCase::Case3)
        throw std::logic_error("max_rank_f_target: only defined in Case3");
    const NetworkParams np = normalize(p).first;
    const int k = std::min(np.n3, np.m);
    return std::min({np.n4 - k, np.n1 - np.m, np.n2 + np.n3 - np.m - k});
}

namespace {

void put_identity(Gf2Matrix& m, std::size_t r0, std::size_t c0, int t) {
    for (int i = 0; i < t; ++i) m.set(r0 + i, c0 + i, true);
}

// The Case3 free block F: rows (n4-n3, n3-k), cols (n2-m, n1-n2), with
// the top-right block forced to zero. Entries are raised greedily in
// row-major order while they increase rank, until the closed-form
// maximum is reached.
Gf2Matrix fill_f(int top_rows, int bot_rows, int left_cols, int right_cols, int target) {
    Gf2Matrix f(static_cast<std::size_t>(top_rows + bot_rows),
                static_cast<std::size_t>(left_cols + right_cols));
    int cur = 0;
    for (std::size_t i = 0; i < f.rows() && cur < target; ++i) {
        for (std::size_t j = 0; j < f.cols() && cur < target; ++j) {
            if (i < static_cast<std::size_t>(top_rows) &&
                j >= static_cast<std::size_t>(left_cols))
                continue;  // forced zero block
            f.set(i, j, true);
            if (static_cast<int>(rank(f)) > cur)
                ++cur;
            else
                f.set(i, j, false);
        }
    }
    if (cur != target)
        throw std::logic_error("construct_scheme: greedy F fill missed the rank target");
    return f;
}

}  // namespace

CodingScheme construct_scheme(const NetworkParams& p) {
    auto [np, swapped] = normalize(p);
    const Regime regime = classify(p);
    const auto q = static_cast<std::size_t>(np.q());
    const int n1 = np.n1, n2 = np.n2, n3 = np.n3, n4 = np.n4, m = np.m;
    CodingScheme s{Gf2Matrix(q, q), Gf2Matrix(q, q)};
    switch (regime.id) {
        case RegimeCase::Case1: {
            const int k = std::min(m, n4);
            const int j = std::min(n1 - m, n3 - k);
            put_identity(s.g_a, 0, q - n1, j);
            put_identity(s.g_a, n3 - k, q - k, k);
            put_identity(s.g_b, n4 - k, q - k, k);
            break;
        }
        case RegimeCase::Case2: {
            const int k = std::min(n1, n4);
            put_identity(s.g_a, n3 - k, q - k, k);
            put_identity(s.g_b, n4 - k, q - k, k);
            break;
        }
        case RegimeCase::Case3: {
            const int k = std::min(n3, m);
            const Gf2Matrix f =
                fill_f(n4 - n3, n3 - k, n2 - m, n1 - n2, max_rank_f_target(np));
            // F_1, F_2 into the top rows of G_A; F_3 into the top rows of G_B.
            for (int r = 0; r < n3 - k; ++r)
                for (int c = 0; c < n1 - m; ++c)
                    s.g_a.set(r, q - n1 + c, f.get(n4 - n3 + r, c));
            put_identity(s.g_a, n3 - k, q - k, k);
            for (int r = 0; r < n4 - n3; ++r)
                for (int c = 0; c < n2 - m; ++c) s.g_b.set(r, q - n2 + c, f.get(r, c));
            put_identity(s.g_b, n4 - k, q - k, k);
            break;
        }
        case RegimeCase::Case4: {
            const int k = std::min(n1, n3);
            put_identity(s.g_a, n3 - k, q - k, k);
            put_identity(s.g_b, n4 - k, q - k, k);
            break;
        }
        case RegimeCase::Case5:
            break;  // zero scheme
        case RegimeCase::Case6: {
            const int k = std::min(n1 - m, std::max(n3, n4));
            if (n3 >= n4)
                put_identity(s.g_a, 0, q - n1, k);
            else
                put_identity(s.g_b, 0, q - n1, k);
            break;
        }
    }
    const int achieved = achievable_rate(np, s);
    if (achieved != capacity(np).capacity)
        throw std::logic_error("construct_scheme: constructed rate != closed-form capacity");
    if (swapped) std::swap(s.g_a, s.g_b);
    return s;
}

std::optional<WitnessBlock> triangular_witness(const NetworkParams& p) {
    const NetworkParams np = normalize(p).first;
    const Regime regime = classify(p);
    const auto q = static_cast<std::size_t>(np.q());
    const int n1 = np.n1, n3 = np.n3, n4 = np.n4, m = np.m;
    int k = 0;
    switch (regime.id) {
        case RegimeCase::Case1: k = std::min(m, n4); break;
        case RegimeCase::Case2: k = std::min(n1, n4); break;
        case RegimeCase::Case3: k = std::min(n3, m); break;
        case RegimeCase::Case4: k = std::min(n1, n3); break;
        case RegimeCase::Case5: return std::nullopt;
        case RegimeCase::Case6: {
            k = std::min(n1 - m, std::max(n3, n4));
            const std::size_t r0 = n3 >= n4 ? q - n3 : q - n4;
            return WitnessBlock{r0, 0, static_cast<std::size_t>(k)};
        }
    }
    return WitnessBlock{q - k, static_cast<std::size_t>(n1 - k), static_cast<std::size_t>(k)};
}

}  // namespace ldnc
