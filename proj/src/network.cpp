#include "ldnc/network.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldnc {

int NetworkParams::q() const { return std::max({n1, n2, n3, n4, m}); }

NetworkParams NetworkParams::make(int n1, int n2, int n3, int n4, int m) {
    if (n1 < 0 || n2 < 0 || n3 < 0 || n4 < 0 || m < 0)
        throw std::invalid_argument("NetworkParams: gains must be nonnegative");
    return NetworkParams{n1, n2, n3, n4, m};
}

namespace detail {
void check_scheme(const NetworkParams& p, const CodingScheme& s) {
    const auto q = static_cast<std::size_t>(p.q());
    if (s.g_a.rows() != q || s.g_a.cols() != q || s.g_b.rows() != q || s.g_b.cols() != q)
        throw std::invalid_argument("CodingScheme: matrices must be q x q");
}
}  // namespace detail

namespace {
// Q^{q-nl} A Q^{q-nr}: the receive shift on the right, the outgoing
// link shift on the left.
Gf2Matrix link(const Gf2Matrix& a, int q, int nl, int nr) {
    const auto shift_l = shift_pow(static_cast<std::size_t>(q), static_cast<std::size_t>(q - nl));
    const auto shift_r = shift_pow(static_cast<std::size_t>(q), static_cast<std::size_t>(q - nr));
    return mul(shift_l, mul(a, shift_r));
}
}  // namespace

Gf2Matrix compose_gs(const NetworkParams& p, const CodingScheme& s) {
    detail::check_scheme(p, s);
    const int q = p.q();
    return add(link(s.g_a, q, p.n3, p.n1), link(s.g_b, q, p.n4, p.n2));
}

Gf2Matrix compose_gm(const NetworkParams& p, const CodingScheme& s) {
    detail::check_scheme(p, s);
    const int q = p.q();
    return add(link(s.g_a, q, p.n3, p.m), link(s.g_b, q, p.n4, p.m));
}

int achievable_rate(const NetworkParams& p, const CodingScheme& s) {
    return static_cast<int>(rank_deficit(compose_gs(p, s), compose_gm(p, s)));
}

Gf2Matrix transmit(const NetworkParams& p, const CodingScheme& s, const Gf2Matrix& x_s,
                   const Gf2Matrix& x_m) {
    detail::check_scheme(p, s);
    const auto q = static_cast<std::size_t>(p.q());
    if (x_s.rows() != q || x_s.cols() != 1 || x_m.rows() != q || x_m.cols() != 1)
        throw std::invalid_argument("transmit: inputs must be length-q column vectors");
    const auto y_a = add(mul(shift_pow(q, q - p.n1), x_s), mul(shift_pow(q, q - p.m), x_m));
    const auto y_b = add(mul(shift_pow(q, q - p.n2), x_s), mul(shift_pow(q, q - p.m), x_m));
    const auto x_a = mul(s.g_a, y_a);
    const auto x_b = mul(s.g_b, y_b);
    return add(mul(shift_pow(q, q - p.n3), x_a), mul(shift_pow(q, q - p.n4), x_b));
}

int cut_bound(const NetworkParams& p) {
    return std::min({std::max(p.n1, p.n2), std::max(p.n3, p.n4), p.n1 + p.n4, p.n2 + p.n3});
}

EffectiveScheme extract_effective(const NetworkParams& p, const CodingScheme& s) {
    detail::check_scheme(p, s);
    const auto q = static_cast<std::size_t>(p.q());
    const auto wa = static_cast<std::size_t>(std::max(p.n1, p.m));
    const auto wb = static_cast<std::size_t>(std::max(p.n2, p.m));
    return EffectiveScheme{
        s.g_a.submatrix(0, q - wa, static_cast<std::size_t>(p.n3), wa),
        s.g_b.submatrix(0, q - wb, static_cast<std::size_t>(p.n4), wb),
    };
}

CodingScheme embed_effective(const NetworkParams& p, const EffectiveScheme& e) {
    const auto q = static_cast<std::size_t>(p.q());
    const auto wa = static_cast<std::size_t>(std::max(p.n1, p.m));
    const auto wb = static_cast<std::size_t>(std::max(p.n2, p.m));
    if (e.block_a.rows() != static_cast<std::size_t>(p.n3) || e.block_a.cols() != wa ||
        e.block_b.rows() != static_cast<std::size_t>(p.n4) || e.block_b.cols() != wb)
        throw std::invalid_argument("embed_effective: block dimensions do not match params");
    CodingScheme s{Gf2Matrix(q, q), Gf2Matrix(q, q)};
    for (std::size_t r = 0; r < e.block_a.rows(); ++r)
        for (std::size_t c = 0; c < wa; ++c)
            s.g_a.set(r, q - wa + c, e.block_a.get(r, c));
    for (std::size_t r = 0; r < e.block_b.rows(); ++r)
        for (std::size_t c = 0; c < wb; ++c)
            s.g_b.set(r, q - wb + c, e.block_b.get(r, c));
    return s;
}

}  // namespace ldnc
