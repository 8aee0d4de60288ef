#include "ldnc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <stdexcept>
#include <thread>

#include "ldnc/capacity.hpp"

namespace ldnc {

namespace {

// Rank of up to 64-bit packed rows, kept separate from the Gf2Matrix
// elimination so the oracle does not share a code path with the library
// it checks.
int rank_bits(const std::uint64_t* rows, int n) {
    std::uint64_t basis[64] = {0};
    int r = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t v = rows[i];
        while (v) {
            const int b = 63 - __builtin_clzll(v);
            if (!basis[b]) {
                basis[b] = v;
                ++r;
                break;
            }
            v ^= basis[b];
        }
    }
    return r;
}

// Enumeration over word-packed rows; valid whenever [G_S G_M] rows fit
// in one word (2q <= 64).
int brute_force_fast(const NetworkParams& p) {
    const int q = p.q();
    const int wa = std::max(p.n1, p.m), wb = std::max(p.n2, p.m);
    const int bits_a = p.n3 * wa, bits_b = p.n4 * wb;
    const std::uint64_t mask_a = wa ? ((std::uint64_t(1) << wa) - 1) : 0;
    const std::uint64_t mask_b = wb ? ((std::uint64_t(1) << wb) - 1) : 0;
    std::uint64_t ga[64], gs[64], gm[64], comb[64];
    int best = 0;
    for (std::uint64_t ca = 0; ca < (std::uint64_t(1) << bits_a); ++ca) {
        for (int i = 0; i < p.n3; ++i)
            ga[i] = ((ca >> (i * wa)) & mask_a) << (q - wa);
        for (std::uint64_t cb = 0; cb < (std::uint64_t(1) << bits_b); ++cb) {
            for (int i = 0; i < q; ++i) gs[i] = gm[i] = 0;
            for (int i = 0; i < p.n3; ++i) {
                gs[q - p.n3 + i] ^= ga[i] >> (q - p.n1);
                gm[q - p.n3 + i] ^= ga[i] >> (q - p.m);
            }
            for (int i = 0; i < p.n4; ++i) {
                const std::uint64_t row = ((cb >> (i * wb)) & mask_b) << (q - wb);
                gs[q - p.n4 + i] ^= row >> (q - p.n2);
                gm[q - p.n4 + i] ^= row >> (q - p.m);
            }
            for (int i = 0; i < q; ++i) comb[i] = gs[i] | (gm[i] << q);
            const int rate = rank_bits(comb, q) - rank_bits(gm, q);
            best = std::max(best, rate);
            if (best == q) return best;
        }
        if (best == q) break;
    }
    return best;
}

int brute_force_general(const NetworkParams& p) {
    const auto na = static_cast<std::size_t>(p.n3);
    const auto nb = static_cast<std::size_t>(p.n4);
    const auto wa = static_cast<std::size_t>(std::max(p.n1, p.m));
    const auto wb = static_cast<std::size_t>(std::max(p.n2, p.m));
    const int bits_a = static_cast<int>(na * wa), bits_b = static_cast<int>(nb * wb);
    int best = 0;
    for (std::uint64_t ca = 0; ca < (std::uint64_t(1) << bits_a); ++ca) {
        EffectiveScheme e{Gf2Matrix(na, wa), Gf2Matrix(nb, wb)};
        for (int b = 0; b < bits_a; ++b)
            if ((ca >> b) & 1) e.block_a.set(b / wa, b % wa, true);
        for (std::uint64_t cb = 0; cb < (std::uint64_t(1) << bits_b); ++cb) {
            for (int b = 0; b < bits_b; ++b)
                e.block_b.set(b / wb, b % wb, (cb >> b) & 1);
            best = std::max(best, achievable_rate(p, embed_effective(p, e)));
            if (best == p.q()) return best;
        }
        if (best == p.q()) break;
    }
    return best;
}

}  // namespace

std::optional<int> brute_force_capacity(const NetworkParams& p, int bit_budget) {
    if (bit_budget < 0) throw std::invalid_argument("brute_force_capacity: negative budget");
    const int bits =
        p.n3 * std::max(p.n1, p.m) + p.n4 * std::max(p.n2, p.m);
    // 62 caps the word-sized enumeration counters; anything near it is
    // uncomputable regardless of the caller's budget.
    if (bits > bit_budget || bits > 62) return std::nullopt;
    if (2 * p.q() <= 64) return brute_force_fast(p);
    return brute_force_general(p);
}

VerificationReport verify_grid(int max_gain, int bit_budget, unsigned jobs) {
    if (max_gain < 0) throw std::invalid_argument("verify_grid: negative max_gain");
    const auto start = std::chrono::steady_clock::now();
    const int side = max_gain + 1;
    const std::size_t npts = static_cast<std::size_t>(side) * side * side * side * side;
    std::vector<NetworkParams> points(npts);
    std::size_t idx = 0;
    for (int n1 = 0; n1 <= max_gain; ++n1)
        for (int n2 = 0; n2 <= max_gain; ++n2)
            for (int n3 = 0; n3 <= max_gain; ++n3)
                for (int n4 = 0; n4 <= max_gain; ++n4)
                    for (int m = 0; m <= max_gain; ++m)
                        points[idx++] = NetworkParams{n1, n2, n3, n4, m};

    std::vector<std::optional<int>> brute(npts);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < npts; i = next.fetch_add(1))
            brute[i] = brute_force_capacity(points[i], bit_budget);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    VerificationReport rep;
    rep.max_gain = max_gain;
    rep.bit_budget = bit_budget;
    rep.total_points = npts;
    for (std::size_t i = 0; i < npts; ++i) {
        if (!brute[i]) {
            rep.skipped.push_back(points[i]);
            continue;
        }
        const int closed = capacity(points[i]).capacity;
        if (closed != *brute[i]) rep.mismatches.push_back({points[i], closed, *brute[i]});
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

bool check_lemma1(int dim) {
    if (dim < 0 || dim > 4) throw std::invalid_argument("check_lemma1: dim must be in [0,4]");
    const int nvec = 1 << dim;
    // Subspaces of F_2^dim as bitmasks over the vector set: contain 0
    // and closed under XOR.
    std::vector<std::uint32_t> subspaces;
    for (std::uint32_t set = 1; set < (std::uint64_t(1) << nvec); ++set) {
        if (!(set & 1)) continue;
        bool closed = true;
        for (int a = 0; a < nvec && closed; ++a) {
            if (!((set >> a) & 1)) continue;
            for (int b = a; b < nvec && closed; ++b)
                if (((set >> b) & 1) && !((set >> (a ^ b)) & 1)) closed = false;
        }
        if (closed) subspaces.push_back(set);
    }

    auto basis_of = [&](std::uint32_t set) {
        Gf2Matrix b(static_cast<std::size_t>(dim), 0);
        for (int v = 1; v < nvec; ++v) {
            if (!((set >> v) & 1)) continue;
            Gf2Matrix col(static_cast<std::size_t>(dim), 1);
            for (int i = 0; i < dim; ++i) col.set(i, 0, (v >> i) & 1);
            const Gf2Matrix cand = hconcat(b, col);
            if (rank(cand) > b.cols()) b = cand;
        }
        return b;
    };

    for (std::uint32_t s1 : subspaces) {
        for (std::uint32_t s2 : subspaces) {
            // Count decompositions of every sum-set element.
            int count[16] = {0};
            for (int a = 0; a < nvec; ++a) {
                if (!((s1 >> a) & 1)) continue;
                for (int b = 0; b < nvec; ++b)
                    if ((s2 >> b) & 1) ++count[a ^ b];
            }
            bool unique = true;
            for (int v = 0; v < nvec; ++v)
                if (count[v] > 1) unique = false;
            const bool trivial = (s1 & s2) == 1;
            if (unique != trivial) return false;
            const bool rank_trivial = rank_intersection(basis_of(s1), basis_of(s2)) == 0;
            if (rank_trivial != trivial) return false;
        }
    }
    return true;
}

bool check_lemma2(int trials, int max_rows, int max_cols, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("check_lemma2: trials must be >= 1");
    std::mt19937_64 rng(seed);
    auto uniform = [&](int hi) { return static_cast<int>(rng() % (hi + 1)); };
    for (int t = 0; t < trials; ++t) {
        const int rows = uniform(max_rows);
        const int cols = uniform(max_cols);
        const int alpha = uniform(rows);
        Gf2Matrix f(rows, cols), g(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                const bool shared = r < rows - alpha;
                const bool fv = rng() & 1;
                f.set(r, c, fv);
                g.set(r, c, shared ? fv : static_cast<bool>(rng() & 1));
            }
        if (rank_deficit(f, g) >
            static_cast<std::size_t>(std::min(cols, alpha)))
            return false;
    }
    return true;
}

}  // namespace ldnc
