#ifndef POSCODE_MESHCODE_HPP
#define POSCODE_MESHCODE_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bitgrid.hpp"
#include "errors.hpp"

namespace poscode::mesh {

/// A 2x2 bit array; entry (r, c) at bit 2r + c.
struct Quad {
    std::uint8_t bits = 0;

    static constexpr Quad of(int a, int b, int c, int d) {
        return Quad{static_cast<std::uint8_t>((a & 1) | (b & 1) << 1 | (c & 1) << 2 | (d & 1) << 3)};
    }
    static Quad from_grid(const BitGrid& g) {
        return of(g(0, 0), g(0, 1), g(1, 0), g(1, 1));
    }

    constexpr bool operator()(std::size_t r, std::size_t c) const { return (bits >> (2 * r + c)) & 1u; }
    constexpr Quad transposed() const { return of((*this)(0, 0), (*this)(1, 0), (*this)(0, 1), (*this)(1, 1)); }
    constexpr Quad rows_flipped() const { return of((*this)(1, 0), (*this)(1, 1), (*this)(0, 0), (*this)(0, 1)); }
    constexpr Quad cols_swapped() const { return of((*this)(0, 1), (*this)(0, 0), (*this)(1, 1), (*this)(1, 0)); }
    constexpr int ones() const { return std::popcount(static_cast<unsigned>(bits)); }

    constexpr bool operator==(const Quad&) const = default;
};

inline constexpr std::size_t sequence_length = 12;
inline constexpr std::size_t pattern_rows = 48;
inline constexpr std::size_t pattern_cols = 576;

/* The construction tables. A and B are indexed 1..12 in the lookups, matching
the digit values; the arrays themselves are 0-based. */
struct MeshTables {
    Quad u = Quad::of(1, 0, 0, 0);
    std::array<Quad, sequence_length> a{
        Quad::of(0, 0, 0, 0), Quad::of(0, 1, 0, 1), Quad::of(0, 0, 1, 1), Quad::of(0, 1, 1, 0),
        Quad::of(0, 1, 1, 1), Quad::of(1, 0, 0, 1), Quad::of(1, 0, 1, 0), Quad::of(1, 0, 1, 1),
        Quad::of(1, 1, 0, 0), Quad::of(1, 1, 0, 1), Quad::of(1, 1, 1, 0), Quad::of(1, 1, 1, 1)};
    std::array<Quad, sequence_length> b{};
    std::array<Quad, 4> r{Quad::of(1, 0, 0, 0), Quad::of(0, 1, 0, 0), Quad::of(0, 0, 1, 0), Quad::of(0, 0, 0, 1)};

    MeshTables() {
        // B_i = [second column of A_i | first column of A_{i mod 12 + 1}]
        for (std::size_t i = 0; i < sequence_length; ++i) {
            const Quad& cur = a[i];
            const Quad& next = a[(i + 1) % sequence_length];
            b[i] = Quad::of(cur(0, 1), next(0, 0), cur(1, 1), next(1, 0));
        }
    }

    static const MeshTables& standard() {
        static const MeshTables t;
        return t;
    }

    /// 1-based index of q in A.
    std::optional<unsigned> index_in_a(Quad q) const { return index_in(a, q); }
    /// 1-based index of q in B.
    std::optional<unsigned> index_in_b(Quad q) const { return index_in(b, q); }
    /// 0-based position of q in R (position of its single 1), if q is a translation of U.
    std::optional<unsigned> index_in_r(Quad q) const {
        if (auto i = index_in(r, q)) return *i - 1;
        return std::nullopt;
    }

private:
    template <std::size_t N>
    static std::optional<unsigned> index_in(const std::array<Quad, N>& table, Quad q) {
        for (std::size_t i = 0; i < N; ++i)
            if (table[i] == q) return static_cast<unsigned>(i + 1);
        return std::nullopt;
    }
};

/* The 48x576 pattern. With j = 12 (j1 - 1) + (j0 - 1), the 4x4 block whose
0-based top-left is (4 i, 4 j) interleaves:

  (4i,   4j)   step 2: U
  (4i,   4j+1) step 2: A_{j1}
  (4i+1, 4j)   step 2: (A_{i+1})^t
  (4i+1, 4j+1) step 2: A_{j0}

The row band i uses A_{i+1}: A is numbered from 1 while bands are numbered from 0. */
inline BitGrid build_mesh(const MeshTables& t = MeshTables::standard()) {
    BitGrid p(pattern_rows, pattern_cols);
    auto put = [&p](std::size_t r, std::size_t c, Quad q) {
        p.set(r, c, q(0, 0));
        p.set(r, c + 2, q(0, 1));
        p.set(r + 2, c, q(1, 0));
        p.set(r + 2, c + 2, q(1, 1));
    };
    for (std::size_t i = 0; i < pattern_rows / 4; ++i)
        for (std::size_t j = 0; j < pattern_cols / 4; ++j) {
            const std::size_t j1 = j / sequence_length, j0 = j % sequence_length; // 0-based digits
            put(4 * i, 4 * j, t.u);
            put(4 * i, 4 * j + 1, t.a[j1]);
            put(4 * i + 1, 4 * j, t.a[i].transposed());
            put(4 * i + 1, 4 * j + 1, t.a[j0]);
        }
    return p;
}

/* Decoded location of a 4x4 window. `x`/`y` are the 1-based column/row of the
window's upper-left cell in the pattern frame (x = 4j + n, y = 4i + m); `row`
and `col` are the same point 0-based. The digit fields hold the table indices
read on the way (1-based, as in A and B). */
struct Position {
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t row = 0;
    std::size_t col = 0;
    unsigned m = 0; // row offset within the block, 1..4
    unsigned n = 0; // column offset within the block, 1..4
    unsigned j0 = 0;
    unsigned j1 = 0;
    unsigned y_digit = 0; // A-index of the row band, i.e. band + 1

    bool operator==(const Position&) const = default;
};

namespace detail {

inline Quad quad_at(const BitGrid& y, std::size_t r, std::size_t c) {
    return Quad::of(y(r, c), y(r, c + 2), y(r + 2, c), y(r + 2, c + 2));
}

[[noreturn]] inline void fail(const std::string& stage, const std::string& detail) {
    throw DecodeError(DecodeFailure::not_a_mesh_window, stage, detail);
}

} // namespace detail

/* Locates an arbitrary 4x4 window. Working 0-based with window origin (R, C):
the cells whose global row and column are both even carry U, so exactly one
of the four interleaved quads is a translation of U, and where its single 1
sits fixes R mod 4 and C mod 4. The remaining quads are then normalised
(row flips, column swaps, transposition for the y digit) and looked up in A,
or in B when they straddle two blocks. */
inline Position decode_mesh(const BitGrid& y, const MeshTables& t = MeshTables::standard()) {
    if (y.rows() != 4 || y.cols() != 4)
        throw DomainError("decode_mesh: window must be 4x4, got " + std::to_string(y.rows()) + "x" +
                          std::to_string(y.cols()));

    // Stage 1: which quad is in R.
    int found_k = -1, found_l = -1;
    unsigned where = 0;
    for (unsigned k = 0; k < 2; ++k)
        for (unsigned l = 0; l < 2; ++l)
            if (auto pos = t.index_in_r(detail::quad_at(y, k, l))) {
                if (found_k >= 0) detail::fail("locate U", "more than one quad is a translation of U");
                found_k = static_cast<int>(k);
                found_l = static_cast<int>(l);
                where = *pos;
            }
    if (found_k < 0) detail::fail("locate U", "no quad is a translation of U");

    // The 1 at quad position (a, b) lies on a global row and column that are multiples of 4.
    const unsigned a = where / 2, b = where % 2;
    const unsigned row_mod = (8 - found_k - 2 * a) % 4;
    const unsigned col_mod = (8 - found_l - 2 * b) % 4;
    const unsigned rp = row_mod % 2, cp = col_mod % 2;

    // Stage 2: j0 from cells with odd global row and odd global column.
    const unsigned odd_r = 1 - rp, odd_c = 1 - cp; // window offsets of the first odd row / column
    const unsigned even_r = rp, even_c = cp;
    const bool odd_row_flipped = (row_mod + odd_r) % 4 == 3;
    const bool odd_col_straddles = (col_mod + odd_c) % 4 == 3;

    Quad q0 = detail::quad_at(y, odd_r, odd_c);
    if (odd_row_flipped) q0 = q0.rows_flipped();
    const auto j0 = odd_col_straddles ? t.index_in_b(q0) : t.index_in_a(q0);
    if (!j0) detail::fail("j0", odd_col_straddles ? "quad not in B" : "quad not in A");

    // Stage 3: j1 from cells with even global row and odd global column.
    Quad q1 = detail::quad_at(y, even_r, odd_c);
    if ((row_mod + even_r) % 4 == 2) q1 = q1.rows_flipped();
    std::optional<unsigned> j1;
    if (!odd_col_straddles)
        j1 = t.index_in_a(q1);
    else if (*j0 != sequence_length)
        j1 = t.index_in_a(q1.cols_swapped());
    else
        j1 = t.index_in_b(q1); // j0 = 12 read from B: the next block carries j1 + 1
    if (!j1) detail::fail("j1", "quad not in the expected table");

    // Stage 4: the y digit from cells with odd global row and even global column,
    // read transposed so that its columns run along the pattern's rows.
    Quad qy = detail::quad_at(y, odd_r, even_c).transposed();
    if ((col_mod + even_c) % 4 == 2) qy = qy.rows_flipped();
    const auto yd = odd_row_flipped ? t.index_in_b(qy) : t.index_in_a(qy);
    if (!yd) detail::fail("y digit", odd_row_flipped ? "quad not in B" : "quad not in A");

    const std::size_t block_col = sequence_length * (*j1 - 1) + (*j0 - 1);
    const std::size_t band = *yd - 1;
    Position p;
    p.row = 4 * band + row_mod;
    p.col = 4 * block_col + col_mod;
    if (p.row + 4 > pattern_rows || p.col + 4 > pattern_cols)
        detail::fail("bounds", "decoded origin (" + std::to_string(p.row) + ", " + std::to_string(p.col) +
                                   ") puts the window outside the pattern");
    p.x = p.col + 1;
    p.y = p.row + 1;
    p.m = row_mod + 1;
    p.n = col_mod + 1;
    p.j0 = *j0;
    p.j1 = *j1;
    p.y_digit = *yd;
    return p;
}

} // namespace poscode::mesh

#endif
