#ifndef POSCODE_UNIQUENESS_HPP
#define POSCODE_UNIQUENESS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitgrid.hpp"
#include "errors.hpp"

namespace poscode {

/* Result of a window-uniqueness scan.

Windows with identical contents are grouped; each group lists its origins in
row-major order and the groups are ordered by their first origin. A pattern is
a valid position code at the scanned window size iff there are no groups. */
struct UniquenessReport {
    std::size_t window_rows = 0;
    std::size_t window_cols = 0;
    bool cyclic = false;
    std::size_t windows_checked = 0;
    std::vector<std::vector<Origin>> collision_groups;

    bool unique() const noexcept { return collision_groups.empty(); }

    /// Number of unordered pairs of distinct origins with equal contents.
    std::size_t duplicate_pairs() const noexcept {
        std::size_t n = 0;
        for (const auto& g : collision_groups) n += g.size() * (g.size() - 1) / 2;
        return n;
    }

    std::vector<std::pair<Origin, Origin>> pairs() const {
        std::vector<std::pair<Origin, Origin>> out;
        out.reserve(duplicate_pairs());
        for (const auto& g : collision_groups)
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = a + 1; b < g.size(); ++b) out.emplace_back(g[a], g[b]);
        return out;
    }
};

namespace detail {

struct Fingerprint {
    std::uint64_t lo;
    std::uint64_t hi;
    bool operator==(const Fingerprint&) const = default;
};

struct FingerprintHash {
    std::size_t operator()(const Fingerprint& f) const noexcept {
        return static_cast<std::size_t>(f.lo ^ (f.hi * 0x9e3779b97f4a7c15ULL));
    }
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

/* Scans every h x w window of a rows x cols array of small symbols and reports
windows with equal contents. `cell(r, c)` returns the symbol at (r, c). With
`cyclic` set, windows wrap across both edges and every cell is an origin.

Each window is reduced to a 128-bit fingerprint (FNV-1a and a multiplicative
polynomial hash); windows sharing a fingerprint are compared cell by cell, so
the report never contains a false collision. */
template <class CellFn>
UniquenessReport verify_uniqueness_by(std::size_t rows, std::size_t cols, CellFn cell, std::size_t h,
                                      std::size_t w, bool cyclic) {
    if (h == 0 || w == 0) throw RangeError("verify_uniqueness: empty window");
    if (h > rows) throw RangeError("verify_uniqueness: window rows " + std::to_string(h) + " > " + std::to_string(rows));
    if (w > cols) throw RangeError("verify_uniqueness: window cols " + std::to_string(w) + " > " + std::to_string(cols));

    const std::size_t origin_rows = cyclic ? rows : rows - h + 1;
    const std::size_t origin_cols = cyclic ? cols : cols - w + 1;

    auto at = [&](std::size_t r, std::size_t c) -> unsigned {
        return static_cast<unsigned>(cell(cyclic ? r % rows : r, cyclic ? c % cols : c));
    };
    auto fingerprint = [&](std::size_t r0, std::size_t c0) {
        std::uint64_t fnv = 0xcbf29ce484222325ULL;
        std::uint64_t poly = 0;
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j) {
                const unsigned v = at(r0 + i, c0 + j);
                fnv = (fnv ^ v) * 0x100000001b3ULL;
                poly = poly * 0xd6e8feb86659fd93ULL + v + 1;
            }
        return detail::Fingerprint{fnv, detail::mix64(poly)};
    };
    auto same = [&](const Origin& a, const Origin& b) {
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j)
                if (at(a.row + i, a.col + j) != at(b.row + i, b.col + j)) return false;
        return true;
    };

    std::vector<std::vector<Origin>> groups;
    std::unordered_map<detail::Fingerprint, std::vector<std::size_t>, detail::FingerprintHash> by_print;
    by_print.reserve(origin_rows * origin_cols);

    for (std::size_t r = 0; r < origin_rows; ++r) {
        for (std::size_t c = 0; c < origin_cols; ++c) {
            const Origin here{r, c};
            auto& bucket = by_print[fingerprint(r, c)];
            bool placed = false;
            for (std::size_t gi : bucket) {
                if (same(groups[gi].front(), here)) {
                    groups[gi].push_back(here);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                bucket.push_back(groups.size());
                groups.push_back({here});
            }
        }
    }

    UniquenessReport report;
    report.window_rows = h;
    report.window_cols = w;
    report.cyclic = cyclic;
    report.windows_checked = origin_rows * origin_cols;
    for (auto& g : groups)
        if (g.size() > 1) report.collision_groups.push_back(std::move(g));
    return report;
}

inline UniquenessReport verify_uniqueness(const BitGrid& g, std::size_t h, std::size_t w, bool cyclic) {
    return verify_uniqueness_by(
        g.rows(), g.cols(), [&g](std::size_t r, std::size_t c) { return g(r, c) ? 1u : 0u; }, h, w, cyclic);
}

} // namespace poscode

#endif
