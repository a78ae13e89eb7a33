#include <gtest/gtest.h>

#include <set>

#include "poscode/meshcode.hpp"
#include "poscode/uniqueness.hpp"

using namespace poscode;
using namespace poscode::mesh;

namespace {

const BitGrid example_y = BitGrid::from_rows({{1, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 1, 1}});

const BitGrid& pattern() {
    static const BitGrid p = build_mesh();
    return p;
}

} // namespace

TEST(Quad, Operations) {
    const auto q = Quad::of(1, 1, 0, 1);
    EXPECT_EQ(q.transposed(), Quad::of(1, 0, 1, 1));
    EXPECT_EQ(q.rows_flipped(), Quad::of(0, 1, 1, 1));
    EXPECT_EQ(q.cols_swapped(), Quad::of(1, 1, 1, 0));
    EXPECT_EQ(q.ones(), 3);
    EXPECT_EQ(Quad::from_grid(BitGrid::from_rows({{1, 1}, {0, 1}})), q);
}

TEST(Tables, AAndB) {
    const auto& t = MeshTables::standard();
    std::set<std::uint8_t> a, b;
    for (const auto& q : t.a) a.insert(q.bits);
    for (const auto& q : t.b) b.insert(q.bits);
    EXPECT_EQ(a.size(), 12u);
    EXPECT_EQ(b.size(), 12u);
    // U and its translations are in neither
    for (const auto& q : t.r) {
        EXPECT_FALSE(t.index_in_a(q));
        EXPECT_FALSE(t.index_in_b(q));
    }
    EXPECT_EQ(t.b[0], Quad::of(0, 0, 0, 0));  // [A1 col 2 | A2 col 1]
    EXPECT_EQ(t.b[11], Quad::of(1, 0, 1, 0));  // [A12 col 2 | A1 col 1]
    EXPECT_EQ(t.index_in_a(Quad::of(0, 1, 0, 1)), 2u);
    EXPECT_EQ(t.index_in_r(Quad::of(0, 0, 1, 0)), 2u);
}

TEST(MeshPattern, ShapeAndUPositions) {
    const auto& p = pattern();
    EXPECT_EQ(p.rows(), 48u);
    EXPECT_EQ(p.cols(), 576u);
    for (std::size_t r = 0; r < 48; r += 2)
        for (std::size_t c = 0; c < 576; c += 2) EXPECT_EQ(p(r, c), r % 4 == 0 && c % 4 == 0);
}

TEST(MeshPattern, NoRepeatedWindow) {
    const auto rep = verify_uniqueness(pattern(), 4, 4, false);
    EXPECT_EQ(rep.windows_checked, 45u * 573u);
    EXPECT_TRUE(rep.unique());
}

TEST(MeshDecode, PrintedExampleWindow) {
    // The window printed as the worked example sits at 0-based (8, 200) in the
    // pattern as constructed, so its row is 9 rather than 5 and its band digit is 3.
    const auto pos = decode_mesh(example_y);
    EXPECT_EQ(pos.x, 201u);
    EXPECT_EQ(pos.y, 9u);
    EXPECT_EQ(pos.j0, 3u);
    EXPECT_EQ(pos.j1, 5u);
    EXPECT_EQ(pos.y_digit, 3u);
    EXPECT_EQ(pos.m, 1u);
    EXPECT_EQ(pos.n, 1u);
}

TEST(MeshDecode, EveryWindow) {
    const auto& p = pattern();
    for (std::size_t r = 0; r + 4 <= p.rows(); ++r)
        for (std::size_t c = 0; c + 4 <= p.cols(); ++c) {
            const auto pos = decode_mesh(subgrid(p, r, c, 4, 4));
            ASSERT_EQ(pos.row, r);
            ASSERT_EQ(pos.col, c);
            ASSERT_EQ(pos.y, r + 1);
            ASSERT_EQ(pos.x, c + 1);
        }
}

TEST(MeshDecode, Rejections) {
    try {
        decode_mesh(BitGrid(4, 4));
        FAIL();
    } catch (const DecodeError& e) {
        EXPECT_EQ(e.kind(), DecodeFailure::not_a_mesh_window);
        EXPECT_EQ(e.stage(), "locate U");
    }
    // two translations of U
    try {
        decode_mesh(BitGrid::from_rows({{1, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
        FAIL();
    } catch (const DecodeError& e) {
        EXPECT_EQ(e.stage(), "locate U");
    }
    EXPECT_THROW(decode_mesh(BitGrid(4, 5)), DomainError);
}
