#include "ldnc/gf2.hpp"

#include <stdexcept>

namespace ldnc {

namespace {

// Working copy for elimination: packed rows plus pivot bookkeeping.
struct Echelon {
    std::size_t rows, cols, wpr;
    std::vector<std::uint64_t> data;
    std::vector<std::size_t> pivot_cols;   // column of the i-th pivot row
};

void xor_row(Echelon& e, std::size_t dst, std::size_t src) {
    std::uint64_t* d = e.data.data() + dst * e.wpr;
    const std::uint64_t* s = e.data.data() + src * e.wpr;
    for (std::size_t w = 0; w < e.wpr; ++w) d[w] ^= s[w];
}

void swap_rows(Echelon& e, std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* ra = e.data.data() + a * e.wpr;
    std::uint64_t* rb = e.data.data() + b * e.wpr;
    for (std::size_t w = 0; w < e.wpr; ++w) std::swap(ra[w], rb[w]);
}

bool bit_at(const Echelon& e, std::size_t r, std::size_t c) {
    return (e.data[r * e.wpr + (c >> 6)] >> (c & 63)) & 1;
}

// Reduced row-echelon form (Gauss-Jordan, no pivot heuristics).
Echelon reduce(const Gf2Matrix& a) {
    Echelon e{a.rows(), a.cols(), a.words_per_row(), {}, {}};
    e.data.resize(e.rows * e.wpr);
    for (std::size_t r = 0; r < e.rows; ++r)
        for (std::size_t w = 0; w < e.wpr; ++w) e.data[r * e.wpr + w] = a.row_words(r)[w];
    std::size_t rank = 0;
    for (std::size_t c = 0; c < e.cols && rank < e.rows; ++c) {
        std::size_t piv = rank;
        while (piv < e.rows && !bit_at(e, piv, c)) ++piv;
        if (piv == e.rows) continue;
        swap_rows(e, piv, rank);
        for (std::size_t i = 0; i < e.rows; ++i)
            if (i != rank && bit_at(e, i, c)) xor_row(e, i, rank);
        e.pivot_cols.push_back(c);
        ++rank;
    }
    return e;
}

}  // namespace

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    Gf2Matrix m(nr, nc);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw std::invalid_argument("from_rows: ragged rows");
        std::size_t c = 0;
        for (int v : row) m.set(r, c++, v != 0);
        ++r;
    }
    return m;
}

bool Gf2Matrix::is_zero() const {
    for (std::uint64_t w : bits_)
        if (w) return false;
    return true;
}

Gf2Matrix Gf2Matrix::column(std::size_t c) const {
    Gf2Matrix m(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) m.set(r, 0, get(r, c));
    return m;
}

Gf2Matrix Gf2Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw std::invalid_argument("submatrix: out of range");
    Gf2Matrix m(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) m.set(r, c, get(r0 + r, c0 + c));
    return m;
}

std::string Gf2Matrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

Gf2Matrix shift_pow(std::size_t q, std::size_t e) {
    Gf2Matrix m(q, q);
    for (std::size_t i = e; i < q; ++i) m.set(i, i - e, true);
    return m;
}

Gf2Matrix mul(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
    Gf2Matrix out(a.rows(), b.cols());
    const std::size_t w = out.words_per_row();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t* dst = out.row_words(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a.get(i, k)) continue;
            const std::uint64_t* src = b.row_words(k);
            for (std::size_t j = 0; j < w; ++j) dst[j] ^= src[j];
        }
    }
    return out;
}

Gf2Matrix add(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("add: shape mismatch");
    Gf2Matrix out = a;
    const std::size_t w = out.words_per_row();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::uint64_t* dst = out.row_words(r);
        const std::uint64_t* src = b.row_words(r);
        for (std::size_t j = 0; j < w; ++j) dst[j] ^= src[j];
    }
    return out;
}

Gf2Matrix hconcat(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row-count mismatch");
    Gf2Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.get(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.get(r, c));
    }
    return out;
}

std::size_t rank(const Gf2Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return reduce(a).pivot_cols.size();
}

std::size_t rank_intersection(const Gf2Matrix& f, const Gf2Matrix& g) {
    return rank(f) + rank(g) - rank(hconcat(f, g));
}

std::size_t rank_deficit(const Gf2Matrix& f, const Gf2Matrix& g) {
    return rank(hconcat(f, g)) - rank(g);
}

Gf2Matrix column_space_basis(const Gf2Matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return Gf2Matrix(a.rows(), 0);
    Echelon e = reduce(a);
    Gf2Matrix out(a.rows(), e.pivot_cols.size());
    for (std::size_t j = 0; j < e.pivot_cols.size(); ++j)
        for (std::size_t r = 0; r < a.rows(); ++r)
            out.set(r, j, a.get(r, e.pivot_cols[j]));
    return out;
}

Gf2Matrix intersection_basis(const Gf2Matrix& f, const Gf2Matrix& g) {
    if (f.rows() != g.rows())
        throw std::invalid_argument("intersection_basis: row-count mismatch");
    // Nullspace of [f g]: each kernel vector (x; y) gives f*x in the
    // intersection, and together those span all of it.
    const Gf2Matrix h = hconcat(f, g);
    if (h.cols() == 0) return Gf2Matrix(f.rows(), 0);
    Echelon e = reduce(h);
    std::vector<std::size_t> piv(e.cols, SIZE_MAX);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) piv[e.pivot_cols[i]] = i;
    Gf2Matrix span(f.rows(), 0);
    for (std::size_t free_c = 0; free_c < h.cols(); ++free_c) {
        if (piv[free_c] != SIZE_MAX) continue;
        // Kernel vector: free column set to 1, pivot columns read off the rref.
        Gf2Matrix x(f.cols(), 1);
        if (free_c < f.cols()) x.set(free_c, 0, true);
        for (std::size_t c = 0; c < f.cols(); ++c)
            if (piv[c] != SIZE_MAX && bit_at(e, piv[c], free_c)) x.set(c, 0, true);
        span = hconcat(span, mul(f, x));
    }
    return column_space_basis(span);
}

Gf2Matrix extend_basis(const Gf2Matrix& sub, const Gf2Matrix& whole) {
    if (sub.rows() != whole.rows())
        throw std::invalid_argument("extend_basis: row-count mismatch");
    if (rank(sub) != sub.cols())
        throw std::logic_error("extend_basis: sub columns are not independent");
    const std::size_t target = rank(whole);
    if (rank(hconcat(whole, sub)) != target)
        throw std::logic_error("extend_basis: sub not contained in range(whole)");
    Gf2Matrix acc = sub;
    Gf2Matrix ext(sub.rows(), 0);
    std::size_t cur = sub.cols();
    for (std::size_t c = 0; c < whole.cols() && cur < target; ++c) {
        const Gf2Matrix col = whole.column(c);
        const Gf2Matrix cand = hconcat(acc, col);
        if (rank(cand) > cur) {
            acc = cand;
            ext = hconcat(ext, col);
            ++cur;
        }
    }
    return ext;
}

std::optional<Gf2Matrix> solve(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (b.cols() != 1 || a.rows() != b.rows())
        throw std::invalid_argument("solve: b must be a column vector matching a");
    const Gf2Matrix aug = hconcat(a, b);
    Echelon e = reduce(aug);
    Gf2Matrix x(a.cols(), 1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        if (e.pivot_cols[i] == a.cols()) return std::nullopt;  // pivot in b: inconsistent
        x.set(e.pivot_cols[i], 0, bit_at(e, i, a.cols()));
    }
    return x;
}

}  // namespace ldnc
