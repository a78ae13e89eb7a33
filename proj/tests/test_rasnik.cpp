#include <gtest/gtest.h>

#include <algorithm>

#include "poscode/rasnik.hpp"
#include "poscode/uniqueness.hpp"

using namespace poscode;
using namespace poscode::rasnik;

namespace {

BitGrid window(const Pattern& p, std::size_t r, std::size_t c) { return subgrid(p.bits, r, c, block_rows, block_cols); }

} // namespace

TEST(B3, Layout) {
    const auto b = encode_b3(0b10110001, 0b1000000011);
    EXPECT_EQ(b.bits.rows(), 11u);
    EXPECT_EQ(b.bits.cols(), 9u);
    EXPECT_TRUE(b.bits(10, 0)); // startbit
    // x bits b0..b7 along the bottom row
    for (unsigned i = 0; i < 8; ++i) EXPECT_EQ(b.bits(10, 1 + i), ((0b10110001u >> i) & 1u) != 0) << i;
    // y bits b9..b0 down the first column
    for (unsigned r = 0; r < 10; ++r) EXPECT_EQ(b.bits(r, 0), ((0b1000000011u >> (9 - r)) & 1u) != 0) << r;
    EXPECT_EQ(b.bits.count_ones(), 1u + 4u + 3u);
}

TEST(B3, ZeroBlockHasOnlyStartbit) {
    const auto b = encode_b3(0, 0);
    EXPECT_EQ(b.bits.count_ones(), 1u);
    EXPECT_THROW(encode_b3(256, 0), RangeError);
    EXPECT_THROW(encode_b3(0, 1024), RangeError);
}

TEST(Checkerboard, Involution) {
    const auto b = encode_b3(77, 300).bits;
    for (std::uint64_t r0 : {0u, 1u})
        for (std::uint64_t c0 : {0u, 1u}) EXPECT_EQ(apply_checkerboard(apply_checkerboard(b, r0, c0), r0, c0), b);
    const BitGrid zero(2, 2);
    EXPECT_EQ(apply_checkerboard(zero, 0, 0), BitGrid::from_rows({{0, 1}, {1, 0}}));
    EXPECT_EQ(apply_checkerboard(zero, 0, 1), BitGrid::from_rows({{1, 0}, {0, 1}}));
}

TEST(RasnikPattern, TilesWithGlobalCheckerboard) {
    const auto p = tile_pattern(3, 5, 2, 2);
    EXPECT_EQ(p.bits.rows(), 22u);
    EXPECT_EQ(p.bits.cols(), 18u);
    // block (4, 6): global pixel row 66, col 36; local (10,0) is the startbit
    const std::uint64_t gr = 11 * 6 + 10, gc = 9 * 4;
    EXPECT_EQ(p.bits(11 + 10, 9), ((gr + gc) & 1u) == 0);
    EXPECT_THROW(tile_pattern(250, 0, 7, 1), RangeError);
    EXPECT_THROW(tile_pattern(0, 1020, 1, 5), RangeError);
}

TEST(RasnikDecode, AlignedWindow) {
    const auto p = tile_pattern(100, 500, 2, 2);
    const auto pos = decode_window(window(p, 0, 0));
    EXPECT_EQ(pos.block_x, 100u);
    EXPECT_EQ(pos.block_y, 500u);
    EXPECT_EQ(pos.pixel_row, 5500u);
    EXPECT_EQ(pos.pixel_col, 900u);
    EXPECT_EQ(pos.row_offset, 0u);
    EXPECT_EQ(pos.col_offset, 0u);
}

TEST(RasnikDecode, EveryOffsetMidRange) {
    const auto p = tile_pattern(200, 8, 3, 3);
    for (std::size_t r = 0; r + block_rows <= p.bits.rows(); ++r)
        for (std::size_t c = 0; c + block_cols <= p.bits.cols(); ++c) {
            const auto pos = decode_window(window(p, r, c));
            ASSERT_EQ(pos.pixel_row, p.pixel_row0() + r);
            ASSERT_EQ(pos.pixel_col, p.pixel_col0() + c);
            ASSERT_EQ(pos.row_offset, (p.pixel_row0() + r) % 11);
            ASSERT_EQ(pos.col_offset, (p.pixel_col0() + c) % 9);
            ASSERT_EQ(pos.parity, (pos.pixel_row + pos.pixel_col) & 1u);
        }
}

TEST(RasnikDecode, NearTheOriginTheTruthAlwaysSurvives) {
    // small coordinates can be read in more than one way; the decoder must
    // refuse those rather than pick one
    const auto p = tile_pattern(0, 0, 4, 4);
    std::size_t ambiguous = 0, total = 0;
    for (std::size_t r = 0; r + block_rows <= p.bits.rows(); ++r)
        for (std::size_t c = 0; c + block_cols <= p.bits.cols(); ++c) {
            ++total;
            const auto w = window(p, r, c);
            const auto all = surviving_hypotheses(w);
            const bool has_truth = std::any_of(all.begin(), all.end(), [&](const Position& q) {
                return q.pixel_row == r && q.pixel_col == c;
            });
            ASSERT_TRUE(has_truth) << r << "," << c;
            if (all.size() > 1) {
                ++ambiguous;
                try {
                    decode_window(w);
                    FAIL();
                } catch (const DecodeError& e) {
                    EXPECT_EQ(e.kind(), DecodeFailure::ambiguous_window);
                }
            }
        }
    EXPECT_GT(ambiguous, 0u);
    EXPECT_LT(ambiguous, total);
}

TEST(RasnikDecode, PatchWindowsAreDistinct) {
    EXPECT_TRUE(verify_uniqueness(tile_pattern(0, 0, 16, 16).bits, block_rows, block_cols, false).unique());
}

TEST(RasnikDecode, Rejections) {
    EXPECT_THROW(decode_window(BitGrid(9, 11)), DomainError);
    try {
        decode_window(BitGrid(11, 9, true));
        FAIL();
    } catch (const DecodeError& e) {
        EXPECT_EQ(e.kind(), DecodeFailure::not_a_rasnik_window);
    }
}
