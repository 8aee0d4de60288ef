#pragma once

#include "ldnc/gf2.hpp"

namespace ldnc {

/// Link gains of the diamond network with a disturbing node:
/// n1 (S->A), n2 (S->B), n3 (A->D), n4 (B->D) and the common disturber
/// gain m (M->A and M->B). The signal dimension q is always derived as
/// the maximum gain, never user-supplied.
struct NetworkParams {
    int n1 = 0, n2 = 0, n3 = 0, n4 = 0, m = 0;

    int q() const;

    /// Validating constructor; throws std::invalid_argument on a
    /// negative gain.
    static NetworkParams make(int n1, int n2, int n3, int n4, int m);

    bool operator==(const NetworkParams&) const = default;
};

/// The pair of relay coding matrices, each q x q.
struct CodingScheme {
    Gf2Matrix g_a;
    Gf2Matrix g_b;
};

/// The sub-blocks of G_A and G_B that actually influence y_D:
/// top n3 (resp. n4) rows, last max(n1,m) (resp. max(n2,m)) columns.
struct EffectiveScheme {
    Gf2Matrix block_a;  // n3 x max(n1,m)
    Gf2Matrix block_b;  // n4 x max(n2,m)
};

/// Source-to-destination transfer matrix
/// Q^{q-n3} G_A Q^{q-n1} + Q^{q-n4} G_B Q^{q-n2}.
Gf2Matrix compose_gs(const NetworkParams& p, const CodingScheme& s);

/// Disturber-to-destination transfer matrix
/// Q^{q-n3} G_A Q^{q-m} + Q^{q-n4} G_B Q^{q-m}.
Gf2Matrix compose_gm(const NetworkParams& p, const CodingScheme& s);

/// rank(G_S) - rank(range(G_S) ^ range(G_M)); the rate the scheme
/// delivers from S to D against arbitrary disturbance.
int achievable_rate(const NetworkParams& p, const CodingScheme& s);

/// Single-slot channel simulation: relays apply their coding matrices to
/// what they hear, the destination XORs the shifted relay outputs.
/// Equals compose_gs * x_s + compose_gm * x_m for all inputs.
Gf2Matrix transmit(const NetworkParams& p, const CodingScheme& s, const Gf2Matrix& x_s,
                   const Gf2Matrix& x_m);

/// Disturber-free diamond cut capacity:
/// min(max(n1,n2), max(n3,n4), n1+n4, n2+n3).
int cut_bound(const NetworkParams& p);

EffectiveScheme extract_effective(const NetworkParams& p, const CodingScheme& s);
CodingScheme embed_effective(const NetworkParams& p, const EffectiveScheme& e);

namespace detail {
void check_scheme(const NetworkParams& p, const CodingScheme& s);
}

}  // namespace ldnc
