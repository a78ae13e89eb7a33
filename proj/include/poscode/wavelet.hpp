#ifndef POSCODE_WAVELET_HPP
#define POSCODE_WAVELET_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>

#include "bitgrid.hpp"
#include "errors.hpp"

namespace poscode::wavelet {

/// 4x4 matrix over GF(2), entry (r, c) stored at bit 4r + c.
class Gf2Matrix4 {
public:
    constexpr Gf2Matrix4() = default;
    constexpr explicit Gf2Matrix4(std::uint16_t bits) : bits_(bits) {}
    constexpr Gf2Matrix4(std::initializer_list<std::initializer_list<int>> rows) {
        std::size_t r = 0;
        for (const auto& row : rows) {
            std::size_t c = 0;
            for (int v : row) set(r, c++, v & 1);
            ++r;
        }
    }

    static constexpr Gf2Matrix4 identity() { return Gf2Matrix4(std::uint16_t{0x8421}); }

    constexpr bool operator()(std::size_t r, std::size_t c) const { return (bits_ >> (4 * r + c)) & 1u; }
    constexpr void set(std::size_t r, std::size_t c, bool v) {
        const auto m = static_cast<std::uint16_t>(1u << (4 * r + c));
        bits_ = v ? static_cast<std::uint16_t>(bits_ | m) : static_cast<std::uint16_t>(bits_ & ~m);
    }
    constexpr std::uint16_t bits() const noexcept { return bits_; }

    constexpr std::uint8_t row(std::size_t r) const { return static_cast<std::uint8_t>((bits_ >> (4 * r)) & 0xF); }

    constexpr Gf2Matrix4 transposed() const {
        Gf2Matrix4 t;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) t.set(c, r, (*this)(r, c));
        return t;
    }

    constexpr bool operator==(const Gf2Matrix4&) const = default;

private:
    std::uint16_t bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Gf2Matrix4& m) {
    os << "[";
    for (std::size_t r = 0; r < 4; ++r) {
        os << (r ? " |" : "");
        for (std::size_t c = 0; c < 4; ++c) os << ' ' << int(m(r, c));
    }
    return os << " ]";
}

constexpr Gf2Matrix4 gf2_mul(const Gf2Matrix4& a, const Gf2Matrix4& b) {
    Gf2Matrix4 out;
    for (std::size_t r = 0; r < 4; ++r) {
        unsigned acc = 0;
        // row r of the product is the XOR of the rows of b selected by row r of a
        for (std::size_t k = 0; k < 4; ++k)
            if (a(r, k)) acc ^= b.row(k);
        for (std::size_t c = 0; c < 4; ++c) out.set(r, c, (acc >> c) & 1u);
    }
    return out;
}

constexpr Gf2Matrix4 operator*(const Gf2Matrix4& a, const Gf2Matrix4& b) { return gf2_mul(a, b); }

/// Gauss-Jordan elimination mod 2.
inline Gf2Matrix4 gf2_inv(const Gf2Matrix4& a) {
    std::array<unsigned, 4> lhs{}, rhs{};
    for (std::size_t r = 0; r < 4; ++r) {
        lhs[r] = a.row(r);
        rhs[r] = 1u << r;
    }
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        while (pivot < 4 && !((lhs[pivot] >> col) & 1u)) ++pivot;
        if (pivot == 4) throw SingularMatrixError("gf2_inv: matrix is singular over GF(2)");
        std::swap(lhs[col], lhs[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (std::size_t r = 0; r < 4; ++r)
            if (r != col && ((lhs[r] >> col) & 1u)) {
                lhs[r] ^= lhs[col];
                rhs[r] ^= rhs[col];
            }
    }
    Gf2Matrix4 inv;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) inv.set(r, c, (rhs[r] >> c) & 1u);
    return inv;
}

/// The binary wavelet filter; a block F is transformed to T F T^t.
inline constexpr Gf2Matrix4 filter{{1, 0, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}};

inline const Gf2Matrix4& filter_inverse() {
    static const Gf2Matrix4 inv = gf2_inv(filter);
    return inv;
}

inline Gf2Matrix4 forward_transform(const Gf2Matrix4& f) { return filter * f * filter.transposed(); }

/// T^-1 G (T^t)^-1; note (T^t)^-1 = (T^-1)^t.
inline Gf2Matrix4 inverse_transform(const Gf2Matrix4& g) {
    const auto& inv = filter_inverse();
    return inv * g * inv.transposed();
}

inline constexpr unsigned max_coordinate = 255;

/// Rows 0-1 hold x with weights 2^0..2^7 left to right then top to bottom; rows 2-3 hold y likewise.
inline Gf2Matrix4 layout(unsigned x, unsigned y) {
    if (x > max_coordinate || y > max_coordinate)
        throw RangeError("layout: coordinates (" + std::to_string(x) + ", " + std::to_string(y) + ") exceed 255");
    return Gf2Matrix4(static_cast<std::uint16_t>(x | (y << 8)));
}

struct Coordinates {
    unsigned x = 0;
    unsigned y = 0;
    bool operator==(const Coordinates&) const = default;
};

inline Coordinates unlayout(const Gf2Matrix4& g) { return {g.bits() & 0xFFu, unsigned(g.bits()) >> 8}; }

inline Gf2Matrix4 encode_block(unsigned x, unsigned y) { return inverse_transform(layout(x, y)); }

inline Coordinates decode_block(const Gf2Matrix4& block) { return unlayout(forward_transform(block)); }

inline constexpr std::size_t block_size = 4;
inline constexpr std::size_t blocks_per_side = 256;
inline constexpr std::size_t pattern_size = block_size * blocks_per_side;

inline Gf2Matrix4 block_from_grid(const BitGrid& g, std::size_t r0, std::size_t c0) {
    if (r0 + block_size > g.rows() || c0 + block_size > g.cols())
        throw RangeError("block at (" + std::to_string(r0) + ", " + std::to_string(c0) + ") outside the grid");
    Gf2Matrix4 m;
    for (std::size_t r = 0; r < block_size; ++r)
        for (std::size_t c = 0; c < block_size; ++c) m.set(r, c, g(r0 + r, c0 + c));
    return m;
}

/// The full 1024x1024 pattern; block (i, j) encodes (x = j, y = i).
struct Pattern {
    BitGrid bits;
};

inline Pattern build_pattern() {
    Pattern p{BitGrid(pattern_size, pattern_size)};
    for (unsigned i = 0; i < blocks_per_side; ++i)
        for (unsigned j = 0; j < blocks_per_side; ++j) {
            const auto b = encode_block(j, i);
            for (std::size_t r = 0; r < block_size; ++r)
                for (std::size_t c = 0; c < block_size; ++c)
                    p.bits.set(block_size * i + r, block_size * j + c, b(r, c));
        }
    return p;
}

/// Block indices come from the delimiters, not from the bits.
inline Coordinates decode_at(const Pattern& p, std::size_t i, std::size_t j) {
    if (i >= blocks_per_side || j >= blocks_per_side)
        throw RangeError("decode_at: block (" + std::to_string(i) + ", " + std::to_string(j) + ") outside 256x256");
    return decode_block(block_from_grid(p.bits, block_size * i, block_size * j));
}

} // namespace poscode::wavelet

#endif
