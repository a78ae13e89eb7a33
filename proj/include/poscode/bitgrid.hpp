#ifndef POSCODE_BITGRID_HPP
#define POSCODE_BITGRID_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace poscode {

/* A rectangular array of bits stored row-major, one byte per cell.

Indexing is (row, col) with row 0 at the top and col 0 at the left. All
indices in this library are 0-based; the 1-based formulas of the individual
schemes are converted where they are used. */
class BitGrid {
public:
    BitGrid() = default;
    BitGrid(std::size_t rows, std::size_t cols, bool fill = false)
        : rows_(rows), cols_(cols), bits_(rows * cols, fill ? 1 : 0) {}

    /// Builds a grid from nested row literals; every row must have the same length.
    static BitGrid from_rows(std::initializer_list<std::initializer_list<int>> rows) {
        const std::size_t h = rows.size();
        const std::size_t w = h == 0 ? 0 : rows.begin()->size();
        BitGrid g(h, w);
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != w)
                throw DomainError("from_rows: ragged row " + std::to_string(r));
            std::size_t c = 0;
            for (int v : row) {
                if (v != 0 && v != 1)
                    throw DomainError("from_rows: non-bit value at (" + std::to_string(r) + ", " +
                                      std::to_string(c) + ")");
                g.set(r, c++, v == 1);
            }
            ++r;
        }
        return g;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    bool operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return bits_[r * cols_ + c] != 0;
    }

    bool at(std::size_t r, std::size_t c) const {
        check(r, c);
        return (*this)(r, c);
    }

    void set(std::size_t r, std::size_t c, bool v) {
        assert(r < rows_ && c < cols_);
        bits_[r * cols_ + c] = v ? 1 : 0;
    }

    void flip(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        bits_[r * cols_ + c] ^= 1;
    }

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    std::size_t count_ones() const {
        std::size_t n = 0;
        for (auto b : bits_) n += b;
        return n;
    }

    bool operator==(const BitGrid&) const = default;

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_) throw RangeError("row " + std::to_string(r) + " >= " + std::to_string(rows_));
        if (c >= cols_) throw RangeError("col " + std::to_string(c) + " >= " + std::to_string(cols_));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

inline std::ostream& operator<<(std::ostream& os, const BitGrid& g) {
    os << g.rows() << "x" << g.cols() << " [";
    for (std::size_t r = 0; r < g.rows(); ++r) {
        if (r) os << " |";
        for (std::size_t c = 0; c < g.cols(); ++c) os << (c ? " " : "") << int(g(r, c));
    }
    return os << "]";
}

struct Origin {
    std::size_t row = 0;
    std::size_t col = 0;

    auto operator<=>(const Origin&) const = default;
};

/// A region copied out of a larger grid, remembering where it came from.
struct Window {
    Origin origin;
    BitGrid bits;
};

/// Copies the h x w region whose top-left cell is g(r, c).
inline BitGrid subgrid(const BitGrid& g, std::size_t r, std::size_t c, std::size_t h, std::size_t w) {
    if (r > g.rows() || h > g.rows() - r)
        throw RangeError("subgrid: rows " + std::to_string(r) + "+" + std::to_string(h) +
                         " exceed " + std::to_string(g.rows()));
    if (c > g.cols() || w > g.cols() - c)
        throw RangeError("subgrid: cols " + std::to_string(c) + "+" + std::to_string(w) +
                         " exceed " + std::to_string(g.cols()));
    BitGrid out(h, w);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < w; ++j) out.set(i, j, g(r + i, c + j));
    return out;
}

inline Window window_at(const BitGrid& g, std::size_t r, std::size_t c, std::size_t h, std::size_t w) {
    return Window{Origin{r, c}, subgrid(g, r, c, h, w)};
}

/// The 2x2 grid [[g(r,c), g(r,c+dc)], [g(r+dr,c), g(r+dr,c+dc)]].
inline BitGrid strided_quad(const BitGrid& g, std::size_t r, std::size_t c, std::size_t dr, std::size_t dc) {
    if (r >= g.rows() || dr >= g.rows() - r)
        throw RangeError("strided_quad: row " + std::to_string(r) + "+" + std::to_string(dr) +
                         " outside " + std::to_string(g.rows()) + " rows");
    if (c >= g.cols() || dc >= g.cols() - c)
        throw RangeError("strided_quad: col " + std::to_string(c) + "+" + std::to_string(dc) +
                         " outside " + std::to_string(g.cols()) + " cols");
    BitGrid q(2, 2);
    q.set(0, 0, g(r, c));
    q.set(0, 1, g(r, c + dc));
    q.set(1, 0, g(r + dr, c));
    q.set(1, 1, g(r + dr, c + dc));
    return q;
}

inline BitGrid transpose(const BitGrid& g) {
    BitGrid t(g.cols(), g.rows());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) t.set(c, r, g(r, c));
    return t;
}

} // namespace poscode

#endif
