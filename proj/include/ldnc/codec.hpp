#pragma once

#include <optional>
#include <vector>

#include "ldnc/gf2.hpp"

namespace ldnc {

/// Linear codebook realizing the rate rank(G_S) - rank(G_S ^ G_M) for a
/// given pair of transfer matrices: the codeword space maps under G_S to
/// a subspace S that meets range(G_M) only at zero, so the destination
/// can split its observation into a message part and a disturbance part
/// uniquely.
struct Codebook {
    int rate = 0;               // message dimension R
    Gf2Matrix encoder;          // q x R, full column rank
    Gf2Matrix decode_basis;     // q x (R + rank(G_M)): S basis, then range(G_M) basis
    Gf2Matrix msg_map;          // R x R invertible map from S-coordinates to messages

    // Factored decode data, prepared once at build time: row transform
    // bringing decode_basis to reduced echelon form and the pivot row of
    // each column.
    Gf2Matrix solve_transform;          // q x q
    std::vector<std::size_t> pivot_rows;  // one per decode_basis column
};

/// Build a codebook for the transfer pair (g_s, g_m), both q x q.
/// Works for arbitrary schemes, not only the optimal constructions;
/// rate 0 yields an empty encoder.
Codebook build_codebook(const Gf2Matrix& g_s, const Gf2Matrix& g_m);

/// x_S = encoder * msg. msg must be an R x 1 column vector.
Gf2Matrix encode(const Codebook& cb, const Gf2Matrix& msg);

/// Recover the unique message with y_d = G_S * encode(msg) + v for some
/// v in range(G_M). Returns nullopt when y_d lies outside
/// range(G_S) + range(G_M), which cannot happen for genuine channel
/// outputs.
std::optional<Gf2Matrix> decode(const Codebook& cb, const Gf2Matrix& y_d);

}  // namespace ldnc
