// Independent reference computations used only by the tests. Nothing here
// calls into the implementation paths it is used to check.
#ifndef POSCODE_TESTS_ORACLES_HPP
#define POSCODE_TESTS_ORACLES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "poscode/anoto_fixtures.hpp"
#include "poscode/bitgrid.hpp"

namespace oracle {

/// First length-m sequence over {0..k-1}, in lexicographic order, with m distinct cyclic n-windows.
inline std::optional<std::vector<unsigned>> brute_force_quasi_debruijn(unsigned k, unsigned n, std::size_t m) {
    std::vector<unsigned> seq(m, 0);
    while (true) {
        std::set<std::vector<unsigned>> seen;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<unsigned> w;
            for (unsigned t = 0; t < n; ++t) w.push_back(seq[(i + t) % m]);
            seen.insert(w);
        }
        if (seen.size() == m) return seq;
        std::size_t p = m;
        while (p > 0 && seq[p - 1] == k - 1) seq[--p] = 0;
        if (p == 0) return std::nullopt;
        ++seq[p - 1];
    }
}

/// Smallest v >= 0 congruent to residues[i] mod moduli[i], by stepping through multiples of moduli[0].
inline std::uint64_t crt_by_scan(const std::vector<std::uint64_t>& residues, const std::vector<std::uint64_t>& moduli) {
    std::uint64_t limit = 1;
    for (auto m : moduli) limit *= m;
    for (std::uint64_t v = residues[0]; v < limit; v += moduli[0]) {
        bool all = true;
        for (std::size_t i = 0; i < moduli.size() && all; ++i) all = v % moduli[i] == residues[i];
        if (all) return v;
    }
    return limit;
}

/// d_i straight from the frozen arrays: 5 + a1 + 3 a2 + 9 a3 + 18 a4.
inline unsigned difference_from_fixtures(std::uint64_t i) {
    namespace fx = poscode::anoto::fixtures;
    return 5 + fx::secondary_1[i % fx::secondary_1.size()] + 3 * fx::secondary_2[i % fx::secondary_2.size()] +
           9 * fx::secondary_3[i % fx::secondary_3.size()] + 18 * fx::secondary_4[i % fx::secondary_4.size()];
}

inline unsigned literal_prefix_sum(std::uint64_t c) {
    std::uint64_t s = 0;
    for (std::uint64_t i = 0; i < c; ++i) s += difference_from_fixtures(i);
    return static_cast<unsigned>(s % 63);
}

/// Pairs of distinct origins with equal windows, by comparing every pair.
inline std::size_t naive_duplicate_pairs(const poscode::BitGrid& g, std::size_t h, std::size_t w, bool cyclic) {
    const std::size_t orows = cyclic ? g.rows() : g.rows() - h + 1;
    const std::size_t ocols = cyclic ? g.cols() : g.cols() - w + 1;
    auto cell = [&](std::size_t r, std::size_t c) { return g(r % g.rows(), c % g.cols()); };
    std::size_t n = 0;
    const std::size_t total = orows * ocols;
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = a + 1; b < total; ++b) {
            const std::size_t ar = a / ocols, ac = a % ocols, br = b / ocols, bc = b % ocols;
            bool eq = true;
            for (std::size_t i = 0; i < h && eq; ++i)
                for (std::size_t j = 0; j < w && eq; ++j) eq = cell(ar + i, ac + j) == cell(br + i, bc + j);
            n += eq;
        }
    return n;
}

using Mat4 = std::array<std::array<int, 4>, 4>;

inline Mat4 mul_mod2(const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            int s = 0;
            for (int k = 0; k < 4; ++k) s += a[r][k] * b[k][c];
            out[r][c] = s % 2;
        }
    return out;
}

} // namespace oracle

#endif
