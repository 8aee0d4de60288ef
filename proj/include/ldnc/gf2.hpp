#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace ldnc {

/// Dense bit-packed matrix over GF(2). Entries are stored row-major,
/// 64 columns per word, column 0 in the least significant bit. Matrices
/// with zero rows or zero columns are valid and have rank 0. All values
/// are immutable by convention once built; every operation below is a
/// pure function.
class Gf2Matrix {
public:
    Gf2Matrix() : rows_(0), cols_(0), wpr_(0) {}
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    static Gf2Matrix identity(std::size_t n);
    static Gf2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = bits_[r * wpr_ + (c >> 6)];
        const std::uint64_t bit = std::uint64_t(1) << (c & 63);
        w = v ? (w | bit) : (w & ~bit);
    }

    const std::uint64_t* row_words(std::size_t r) const { return bits_.data() + r * wpr_; }
    std::uint64_t* row_words(std::size_t r) { return bits_.data() + r * wpr_; }

    bool is_zero() const;
    Gf2Matrix column(std::size_t c) const;
    Gf2Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    bool operator==(const Gf2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }
    bool operator!=(const Gf2Matrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::size_t rows_, cols_, wpr_;
    std::vector<std::uint64_t> bits_;
};

/// q x q shift matrix raised to the e-th power: ones on the e-th
/// subdiagonal. e = 0 gives the identity; e >= q gives the zero matrix.
Gf2Matrix shift_pow(std::size_t q, std::size_t e);

/// Matrix product over GF(2). Throws std::invalid_argument on inner
/// dimension mismatch.
Gf2Matrix mul(const Gf2Matrix& a, const Gf2Matrix& b);

/// Entrywise XOR. Throws std::invalid_argument on shape mismatch.
Gf2Matrix add(const Gf2Matrix& a, const Gf2Matrix& b);

/// Columns of a followed by columns of b. Throws std::invalid_argument
/// on row-count mismatch.
Gf2Matrix hconcat(const Gf2Matrix& a, const Gf2Matrix& b);

/// Rank over GF(2) by Gauss-Jordan elimination.
std::size_t rank(const Gf2Matrix& a);

/// dim(range(f) ^ range(g)) = rank(f) + rank(g) - rank([f g]).
std::size_t rank_intersection(const Gf2Matrix& f, const Gf2Matrix& g);

/// rank([f g]) - rank(g), which equals rank(f) - rank_intersection(f, g).
std::size_t rank_deficit(const Gf2Matrix& f, const Gf2Matrix& g);

/// Matrix whose columns are a basis of range(a), drawn from a's own
/// columns (the pivot columns of the echelon form).
Gf2Matrix column_space_basis(const Gf2Matrix& a);

/// Matrix whose columns are a basis of range(f) ^ range(g).
Gf2Matrix intersection_basis(const Gf2Matrix& f, const Gf2Matrix& g);

/// Columns of `whole` that extend the columns of `sub` to a basis of
/// range(whole). Requires sub's columns independent and contained in
/// range(whole); throws std::logic_error otherwise.
Gf2Matrix extend_basis(const Gf2Matrix& sub, const Gf2Matrix& whole);

/// Some x with a*x = b, or nullopt when the system is inconsistent.
/// b must be a column vector with a.rows() entries. Free variables are
/// set to zero, so the answer is deterministic.
std::optional<Gf2Matrix> solve(const Gf2Matrix& a, const Gf2Matrix& b);

}  // namespace ldnc
