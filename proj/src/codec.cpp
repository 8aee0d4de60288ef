#include "ldnc/codec.hpp"

#include <stdexcept>

namespace ldnc {

Codebook build_codebook(const Gf2Matrix& g_s, const Gf2Matrix& g_m) {
    if (g_s.rows() != g_s.cols() || g_m.rows() != g_m.cols() || g_s.rows() != g_m.rows())
        throw std::invalid_argument("build_codebook: g_s and g_m must be q x q");
    const std::size_t q = g_s.rows();

    // S = a complement of range(G_S) ^ range(G_M) inside range(G_S).
    const Gf2Matrix inter = intersection_basis(g_s, g_m);
    const Gf2Matrix s_basis = extend_basis(inter, column_space_basis(g_s));
    const std::size_t r = s_basis.cols();

    Codebook cb;
    cb.rate = static_cast<int>(r);

    // Codewords: preimages of the S basis under G_S. G_S maps the
    // encoder columns onto independent vectors, so the encoder has full
    // column rank.
    cb.encoder = Gf2Matrix(q, 0);
    for (std::size_t j = 0; j < r; ++j) {
        auto x = solve(g_s, s_basis.column(j));
        if (!x) throw std::logic_error("build_codebook: S basis not in range(G_S)");
        cb.encoder = hconcat(cb.encoder, *x);
    }

    cb.decode_basis = hconcat(s_basis, column_space_basis(g_m));
    cb.msg_map = Gf2Matrix::identity(r);

    // Gauss-Jordan on [decode_basis | I_q]; the right half records the
    // row transform used by every decode call.
    Gf2Matrix work = hconcat(cb.decode_basis, Gf2Matrix::identity(q));
    const std::size_t nc = cb.decode_basis.cols();
    cb.pivot_rows.assign(nc, 0);
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < nc; ++c) {
        std::size_t piv = next_row;
        while (piv < q && !work.get(piv, c)) ++piv;
        if (piv == q)
            throw std::logic_error("build_codebook: decode basis columns not independent");
        if (piv != next_row)
            for (std::size_t j = 0; j < work.cols(); ++j) {
                const bool a = work.get(next_row, j), b = work.get(piv, j);
                work.set(next_row, j, b);
                work.set(piv, j, a);
            }
        for (std::size_t i = 0; i < q; ++i)
            if (i != next_row && work.get(i, c))
                for (std::size_t j = 0; j < work.cols(); ++j)
                    work.set(i, j, work.get(i, j) ^ work.get(next_row, j));
        cb.pivot_rows[c] = next_row;
        ++next_row;
    }
    cb.solve_transform = work.submatrix(0, nc, q, q);
    return cb;
}

Gf2Matrix encode(const Codebook& cb, const Gf2Matrix& msg) {
    if (msg.cols() != 1 || msg.rows() != static_cast<std::size_t>(cb.rate))
        throw std::invalid_argument("encode: msg must be an R x 1 vector");
    return mul(cb.encoder, msg);
}

std::optional<Gf2Matrix> decode(const Codebook& cb, const Gf2Matrix& y_d) {
    const std::size_t q = cb.decode_basis.rows();
    if (y_d.cols() != 1 || y_d.rows() != q)
        throw std::invalid_argument("decode: y_d must be a q x 1 vector");
    const Gf2Matrix t = mul(cb.solve_transform, y_d);
    // Rows past the pivots of the reduced decode basis are zero rows;
    // a nonzero residue there means y_d is outside the decodable span.
    for (std::size_t i = cb.pivot_rows.size(); i < q; ++i)
        if (t.get(i, 0)) return std::nullopt;
    const auto r = static_cast<std::size_t>(cb.rate);
    Gf2Matrix coords(r, 1);
    for (std::size_t j = 0; j < r; ++j) coords.set(j, 0, t.get(cb.pivot_rows[j], 0));
    return mul(cb.msg_map, coords);
}

}  // namespace ldnc
