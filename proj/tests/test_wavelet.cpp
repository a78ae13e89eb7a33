#include <gtest/gtest.h>

#include "oracles.hpp"
#include "poscode/wavelet.hpp"

using namespace poscode;
using namespace poscode::wavelet;

namespace {

oracle::Mat4 to_ints(const Gf2Matrix4& m) {
    oracle::Mat4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = m(r, c);
    return out;
}

} // namespace

TEST(Gf2, MultiplicationAgreesWithIntegerOracle) {
    for (std::uint32_t a = 1; a < 65536; a += 997)
        for (std::uint32_t b = 3; b < 65536; b += 1231) {
            const Gf2Matrix4 ma(static_cast<std::uint16_t>(a)), mb(static_cast<std::uint16_t>(b));
            ASSERT_EQ(to_ints(ma * mb), oracle::mul_mod2(to_ints(ma), to_ints(mb)));
        }
}

TEST(Gf2, FilterInverse) {
    const Gf2Matrix4 expected{{1, 0, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 0}, {0, 1, 1, 1}};
    EXPECT_EQ(filter_inverse(), expected);
    EXPECT_EQ(filter * filter_inverse(), Gf2Matrix4::identity());
    EXPECT_EQ(filter_inverse() * filter, Gf2Matrix4::identity());
}

TEST(Gf2, InverseOfEveryInvertibleMatrix) {
    std::size_t invertible = 0;
    for (std::uint32_t v = 0; v < 65536; ++v) {
        const Gf2Matrix4 m(static_cast<std::uint16_t>(v));
        try {
            const auto inv = gf2_inv(m);
            ASSERT_EQ(m * inv, Gf2Matrix4::identity());
            ++invertible;
        } catch (const SingularMatrixError&) {
        }
    }
    // |GL(4, 2)| = (16-1)(16-2)(16-4)(16-8)
    EXPECT_EQ(invertible, 20160u);
}

TEST(Gf2, SingularThrows) {
    EXPECT_THROW(gf2_inv(Gf2Matrix4{{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), SingularMatrixError);
    EXPECT_THROW(gf2_inv(Gf2Matrix4()), SingularMatrixError);
}

TEST(Layout, PrintedExample) {
    const Gf2Matrix4 g{{0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 1, 0}};
    EXPECT_EQ(layout(12, 108), g);
    EXPECT_EQ(unlayout(g), (Coordinates{12, 108}));
    EXPECT_THROW(layout(256, 0), RangeError);
}

TEST(Layout, BitWeights) {
    EXPECT_EQ(layout(1, 0), Gf2Matrix4({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    EXPECT_EQ(layout(16, 0), Gf2Matrix4({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    EXPECT_EQ(layout(0, 128), Gf2Matrix4({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}}));
}

TEST(Blocks, RoundtripAll) {
    for (unsigned x = 0; x < 256; ++x)
        for (unsigned y = 0; y < 256; ++y) ASSERT_EQ(decode_block(encode_block(x, y)), (Coordinates{x, y}));
}

TEST(Blocks, EncodeIsInverseTransformOfLayout) {
    const auto b = encode_block(12, 108);
    EXPECT_EQ(forward_transform(b), layout(12, 108));
    EXPECT_EQ(inverse_transform(forward_transform(b)), b);
}

TEST(WaveletPattern, SizeAndPlacement) {
    const auto p = build_pattern();
    EXPECT_EQ(p.bits.rows(), 1024u);
    EXPECT_EQ(p.bits.cols(), 1024u);
    EXPECT_EQ(decode_at(p, 108, 12), (Coordinates{12, 108}));
    EXPECT_EQ(block_from_grid(p.bits, 4 * 108, 4 * 12), encode_block(12, 108));
    EXPECT_THROW(decode_at(p, 256, 0), RangeError);
    EXPECT_THROW(block_from_grid(p.bits, 1021, 0), RangeError);
}
