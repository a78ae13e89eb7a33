#ifndef POSCODE_RASNIK_HPP
#define POSCODE_RASNIK_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bitgrid.hpp"
#include "errors.hpp"

namespace poscode::rasnik {

inline constexpr std::size_t block_rows = 11;
inline constexpr std::size_t block_cols = 9;
inline constexpr unsigned max_x = 255;
inline constexpr unsigned max_y = 1023;

/* One B3 coding block before the checkerboard overlay, 11 rows x 9 cols.

  - (10, 0) is the startbit, always 1
  - bottom row, cols 1..8: x bits b0..b7 left to right
  - first column, rows 0..9: y bits b9..b0 top to bottom
  - everything else is 0 */
struct B3Block {
    unsigned x = 0;
    unsigned y = 0;
    BitGrid bits;
};

enum class CellRole { startbit, x_bit, y_bit, zero };

struct CellInfo {
    CellRole role;
    unsigned bit; // bit index for x_bit / y_bit
};

constexpr CellInfo cell_role(std::size_t local_row, std::size_t local_col) noexcept {
    if (local_row == block_rows - 1 && local_col == 0) return {CellRole::startbit, 0};
    if (local_col == 0) return {CellRole::y_bit, static_cast<unsigned>(block_rows - 2 - local_row)};
    if (local_row == block_rows - 1) return {CellRole::x_bit, static_cast<unsigned>(local_col - 1)};
    return {CellRole::zero, 0};
}

inline B3Block encode_b3(unsigned x, unsigned y) {
    if (x > max_x) throw RangeError("encode_b3: x = " + std::to_string(x) + " > 255");
    if (y > max_y) throw RangeError("encode_b3: y = " + std::to_string(y) + " > 1023");
    B3Block b{x, y, BitGrid(block_rows, block_cols)};
    for (std::size_t r = 0; r < block_rows; ++r)
        for (std::size_t c = 0; c < block_cols; ++c) {
            const auto info = cell_role(r, c);
            switch (info.role) {
                case CellRole::startbit: b.bits.set(r, c, true); break;
                case CellRole::x_bit: b.bits.set(r, c, (x >> info.bit) & 1u); break;
                case CellRole::y_bit: b.bits.set(r, c, (y >> info.bit) & 1u); break;
                case CellRole::zero: break;
            }
        }
    return b;
}

/// XORs the global checkerboard onto g, whose (0,0) sits at global pixel (row0, col0).
/// Cells with odd global row + col are inverted; applying it twice is the identity.
inline BitGrid apply_checkerboard(BitGrid g, std::uint64_t row0, std::uint64_t col0) {
    const unsigned phase = static_cast<unsigned>((row0 + col0) & 1u);
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            if ((phase + r + c) & 1u) g.flip(r, c);
    return g;
}

/// W x H blocks starting at block (x0, y0); block (x, y) sits at global pixel (11 y, 9 x).
struct Pattern {
    unsigned x0 = 0;
    unsigned y0 = 0;
    unsigned blocks_wide = 0;
    unsigned blocks_high = 0;
    BitGrid bits;

    std::uint64_t pixel_row0() const noexcept { return std::uint64_t{block_rows} * y0; }
    std::uint64_t pixel_col0() const noexcept { return std::uint64_t{block_cols} * x0; }
};

inline Pattern tile_pattern(unsigned x0, unsigned y0, unsigned w, unsigned h) {
    if (x0 > max_x + 1 || w > max_x + 1 - x0) throw RangeError("tile_pattern: x0 + W exceeds 256");
    if (y0 > max_y + 1 || h > max_y + 1 - y0) throw RangeError("tile_pattern: y0 + H exceeds 1024");
    BitGrid plain(block_rows * h, block_cols * w);
    for (unsigned by = 0; by < h; ++by)
        for (unsigned bx = 0; bx < w; ++bx) {
            const auto b = encode_b3(x0 + bx, y0 + by);
            for (std::size_t r = 0; r < block_rows; ++r)
                for (std::size_t c = 0; c < block_cols; ++c)
                    if (b.bits(r, c)) plain.set(by * block_rows + r, bx * block_cols + c, true);
        }
    Pattern p{x0, y0, w, h, {}};
    p.bits = apply_checkerboard(std::move(plain), p.pixel_row0(), p.pixel_col0());
    return p;
}

/// Where an 11x9 window sits: global pixel of its top-left corner and the block containing it.
struct Position {
    std::uint64_t pixel_row = 0;
    std::uint64_t pixel_col = 0;
    unsigned block_x = 0;
    unsigned block_y = 0;
    unsigned row_offset = 0; // pixel_row mod 11
    unsigned col_offset = 0; // pixel_col mod 9
    unsigned parity = 0;     // checkerboard phase at the window's (0,0)

    bool operator==(const Position&) const = default;
};

namespace detail {

// Known bits of one block's coordinates as seen through a window fragment.
struct Fragment {
    unsigned x_mask = 0, x_val = 0;
    unsigned y_mask = 0, y_val = 0;
};

// Values v in [0, limit] with ((v + shift) & mask) == val for each constraint.
template <std::size_t N>
std::vector<unsigned> solve_coordinate(unsigned limit, const std::array<unsigned, N>& shift,
                                       const std::array<unsigned, N>& mask, const std::array<unsigned, N>& val) {
    std::vector<unsigned> out;
    for (unsigned v = 0; v <= limit; ++v) {
        bool ok = true;
        for (std::size_t i = 0; i < N && ok; ++i) ok = ((v + shift[i]) & mask[i]) == val[i];
        if (ok) out.push_back(v);
    }
    return out;
}

} // namespace detail

/* Every reading of the window that survives: for each offset (dr, dc) and
checkerboard parity, undo the overlay, split the window into fragments of up
to four blocks (TL, TR, BL, BR), and require the startbit, the structural
zeros, neighbour coordinates differing by exactly one, and the parity implied
by the deduced global position to match the assumed one. Candidates are listed
in (dr, dc, parity) order. */
inline std::vector<Position> surviving_hypotheses(const BitGrid& win) {
    if (win.rows() != block_rows || win.cols() != block_cols)
        throw DomainError("rasnik decode: window must be 11x9, got " + std::to_string(win.rows()) + "x" +
                          std::to_string(win.cols()));
    std::vector<Position> out;
    for (unsigned dr = 0; dr < block_rows; ++dr)
        for (unsigned dc = 0; dc < block_cols; ++dc)
            for (unsigned parity = 0; parity < 2; ++parity) {
                std::array<detail::Fragment, 4> frag{};
                bool ok = true;
                for (std::size_t i = 0; i < block_rows && ok; ++i)
                    for (std::size_t j = 0; j < block_cols && ok; ++j) {
                        const bool bit = win(i, j) != ((parity + i + j) & 1u);
                        const std::size_t lr = (dr + i) % block_rows, lc = (dc + j) % block_cols;
                        auto& f = frag[(dr + i >= block_rows ? 2 : 0) + (dc + j >= block_cols ? 1 : 0)];
                        const auto info = cell_role(lr, lc);
                        switch (info.role) {
                            case CellRole::startbit: ok = bit; break;
                            case CellRole::zero: ok = !bit; break;
                            case CellRole::x_bit:
                                f.x_mask |= 1u << info.bit;
                                f.x_val |= unsigned(bit) << info.bit;
                                break;
                            case CellRole::y_bit:
                                f.y_mask |= 1u << info.bit;
                                f.y_val |= unsigned(bit) << info.bit;
                                break;
                        }
                    }
                if (!ok) continue;

                // TL = (X, Y), TR = (X+1, Y), BL = (X, Y+1), BR = (X+1, Y+1)
                const auto xs = detail::solve_coordinate<4>(
                    dc > 0 ? max_x - 1 : max_x, {0, 1, 0, 1},
                    {frag[0].x_mask, frag[1].x_mask, frag[2].x_mask, frag[3].x_mask},
                    {frag[0].x_val, frag[1].x_val, frag[2].x_val, frag[3].x_val});
                const auto ys = detail::solve_coordinate<4>(
                    dr > 0 ? max_y - 1 : max_y, {0, 0, 1, 1},
                    {frag[0].y_mask, frag[1].y_mask, frag[2].y_mask, frag[3].y_mask},
                    {frag[0].y_val, frag[1].y_val, frag[2].y_val, frag[3].y_val});
                for (unsigned y : ys)
                    for (unsigned x : xs) {
                        const std::uint64_t row = std::uint64_t{block_rows} * y + dr;
                        const std::uint64_t col = std::uint64_t{block_cols} * x + dc;
                        if (((row + col) & 1u) != parity) continue;
                        out.push_back(Position{row, col, x, y, dr, dc, parity});
                    }
            }
    return out;
}

/// The unique reading of an 11x9 window cut from a Rasnik pattern at any alignment.
inline Position decode_window(const BitGrid& win) {
    auto found = surviving_hypotheses(win);
    if (found.empty())
        throw DecodeError(DecodeFailure::not_a_rasnik_window, "hypothesis search",
                          "no offset and parity explains the window");
    if (found.size() > 1) {
        std::string list;
        for (const auto& p : found)
            list += " (row " + std::to_string(p.pixel_row) + ", col " + std::to_string(p.pixel_col) + ")";
        throw DecodeError(DecodeFailure::ambiguous_window, "hypothesis search",
                          std::to_string(found.size()) + " readings:" + list);
    }
    return found.front();
}

} // namespace poscode::rasnik

#endif
