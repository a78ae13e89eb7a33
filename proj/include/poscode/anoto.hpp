#ifndef POSCODE_ANOTO_HPP
#define POSCODE_ANOTO_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "anoto_fixtures.hpp"
#include "bitgrid.hpp"
#include "errors.hpp"
#include "sequences.hpp"

namespace poscode::anoto {

/// The published main number sequence: 63 bits, every cyclic 6-window distinct.
inline constexpr std::array<std::uint8_t, 63> main_number_sequence{
    0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0, 0,
    1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1};

inline constexpr unsigned main_length = 63;
inline constexpr unsigned window_size = 6;
inline constexpr unsigned difference_count = window_size - 1;
inline constexpr std::uint64_t standard_period = 236ULL * 233ULL * 31ULL * 241ULL;

/* Per-axis sequence bundle: the main number sequence, the four secondary
sequences that drive the primary difference sequence through phi, the CRT
basis over the secondary lengths, and per-secondary prefix sums.

The same system serves both axes. */
class SequenceSystem {
public:
    SequenceSystem(CyclicSequence main, std::array<CyclicSequence, 4> secondary)
        : main_(std::move(main)), secondary_(std::move(secondary)), basis_(lengths_of(secondary_)) {
        if (main_.alphabet_size() != 2 || main_.order() != window_size || main_.length() != main_length)
            throw DomainError("main sequence must be binary, order 6, length 63");
        for (std::size_t l = 0; l < 4; ++l) {
            const auto& s = secondary_[l];
            if (s.alphabet_size() != phi_radices[l] || s.order() != difference_count)
                throw DomainError("secondary sequence " + std::to_string(l + 1) + " must have alphabet " +
                                  std::to_string(phi_radices[l]) + " and order 5");
            auto& pre = prefix_[l];
            pre.assign(s.length() + 1, 0);
            for (std::size_t j = 0; j < s.length(); ++j) pre[j + 1] = pre[j] + s[j];
        }
    }

    /// Main sequence plus the frozen fixtures.
    static const SequenceSystem& standard() {
        static const SequenceSystem sys = [] {
            auto seq = [](unsigned k, unsigned n, const auto& arr) {
                return CyclicSequence(k, n, std::vector<std::uint8_t>(arr.begin(), arr.end()));
            };
            return SequenceSystem(seq(2, 6, main_number_sequence),
                                  {seq(3, 5, fixtures::secondary_1), seq(3, 5, fixtures::secondary_2),
                                   seq(2, 5, fixtures::secondary_3), seq(3, 5, fixtures::secondary_4)});
        }();
        return sys;
    }

    const CyclicSequence& main() const noexcept { return main_; }
    const CyclicSequence& secondary(std::size_t l) const { return secondary_.at(l); }
    const CrtBasis& basis() const noexcept { return basis_; }
    std::uint64_t period() const noexcept { return basis_.product(); }

    /// Sum of the first j symbols of secondary l, j <= its length.
    std::uint64_t period_sum(std::size_t l, std::size_t j) const { return prefix_.at(l).at(j); }

    /// d_i, reduced mod the period; always in {5..58}.
    unsigned difference_at(std::uint64_t i) const {
        i %= period();
        PhiDigits a{};
        for (std::size_t l = 0; l < 4; ++l) a[l] = secondary_[l][i % secondary_[l].length()];
        return phi_inv(a);
    }

    /* (d_0 + ... + d_{c-1}) mod 63 in constant time. phi_inv is linear in the
    digits, so the sum splits into 5c plus weighted sums of each secondary,
    and each of those is whole periods plus a prefix. */
    unsigned prefix_diff_sum(std::uint64_t c) const {
        if (c > period())
            throw RangeError("prefix_diff_sum: " + std::to_string(c) + " > period " + std::to_string(period()));
        std::uint64_t total = (phi_min * (c % main_length)) % main_length;
        for (std::size_t l = 0; l < 4; ++l) {
            const std::uint64_t len = secondary_[l].length();
            const std::uint64_t s = (c / len) * prefix_[l][len] + prefix_[l][c % len];
            total += phi_weights[l] * (s % main_length);
        }
        return static_cast<unsigned>(total % main_length);
    }

    /// Rotation of the main sequence in column c: p(0) = section, p(c) - p(c+1) = d_c (mod 63).
    unsigned column_phase(unsigned section, std::uint64_t c) const {
        if (section >= main_length) throw RangeError("section " + std::to_string(section) + " >= 63");
        if (c >= period()) throw RangeError("column " + std::to_string(c) + " >= period");
        return (section + main_length - prefix_diff_sum(c)) % main_length;
    }

private:
    static std::vector<std::uint64_t> lengths_of(const std::array<CyclicSequence, 4>& s) {
        return {s[0].length(), s[1].length(), s[2].length(), s[3].length()};
    }

    CyclicSequence main_;
    std::array<CyclicSequence, 4> secondary_;
    CrtBasis basis_;
    std::array<std::vector<std::uint64_t>, 4> prefix_;
};

/// A w x h piece of the pattern. Cell (r, c) is the dot at global (x0 + c, y0 + r).
struct Patch {
    std::uint64_t origin_x = 0;
    std::uint64_t origin_y = 0;
    std::size_t width = 0;
    std::size_t height = 0;
    unsigned section_x = 0;
    unsigned section_y = 0;
    BitGrid xbits;
    BitGrid ybits;
};

/* x plane: column c carries the main sequence rotated by the column phase of
x0 + c, read downward from global row y0. y plane: the transposed twin, row r
rotated by the phase of y0 + r under section_y, read rightward from x0. */
inline Patch generate_patch(const SequenceSystem& sys, unsigned section_x, unsigned section_y, std::uint64_t x0,
                            std::uint64_t y0, std::size_t w, std::size_t h) {
    const std::uint64_t period = sys.period();
    if (section_x >= main_length || section_y >= main_length) throw RangeError("generate_patch: section >= 63");
    if (x0 > period || w > period - x0) throw RangeError("generate_patch: x0 + w exceeds the period");
    if (y0 > period || h > period - y0) throw RangeError("generate_patch: y0 + h exceeds the period");

    Patch p{x0, y0, w, h, section_x, section_y, BitGrid(h, w), BitGrid(h, w)};
    const auto& main = sys.main();
    std::vector<unsigned> col_phase(w), row_phase(h);
    for (std::size_t c = 0; c < w; ++c) col_phase[c] = sys.column_phase(section_x, x0 + c);
    for (std::size_t r = 0; r < h; ++r) row_phase[r] = sys.column_phase(section_y, y0 + r);
    const unsigned y_base = static_cast<unsigned>(y0 % main_length);
    const unsigned x_base = static_cast<unsigned>(x0 % main_length);
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c) {
            p.xbits.set(r, c, main[(y_base + r + col_phase[c]) % main_length] != 0);
            p.ybits.set(r, c, main[(x_base + c + row_phase[r]) % main_length] != 0);
        }
    return p;
}

struct Position {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    unsigned section_x = 0;
    unsigned section_y = 0;

    bool operator==(const Position&) const = default;
};

namespace detail {

struct AxisReading {
    std::uint64_t place = 0;
    unsigned first_start = 0; // main-sequence index of word 0
};

// words[k] is the k-th 6-bit word along the axis, first bit most significant.
inline AxisReading read_axis(const SequenceSystem& sys, const std::array<std::uint64_t, window_size>& words,
                             const std::string& axis) {
    std::array<unsigned, window_size> start{};
    for (std::size_t k = 0; k < window_size; ++k) {
        const auto hit = sys.main().find_key(words[k]);
        if (!hit)
            throw DecodeError(DecodeFailure::corrupted_window, axis + " main word " + std::to_string(k),
                              "6-bit word " + std::to_string(words[k]) + " is not in the main number sequence");
        start[k] = static_cast<unsigned>(*hit);
    }
    std::array<PhiDigits, difference_count> digits{};
    for (std::size_t k = 0; k < difference_count; ++k) {
        const unsigned d = (start[k] + main_length - start[k + 1]) % main_length;
        if (d < phi_min || d > phi_max)
            throw DecodeError(DecodeFailure::invalid_difference, axis + " difference " + std::to_string(k),
                              "d = " + std::to_string(d) + " outside {5..58}");
        digits[k] = phi(d);
    }
    std::array<std::uint64_t, 4> residues{};
    for (std::size_t l = 0; l < 4; ++l) {
        std::array<unsigned, difference_count> stream{};
        for (std::size_t k = 0; k < difference_count; ++k) stream[k] = digits[k][l];
        const auto hit = sys.secondary(l).find(stream);
        if (!hit)
            throw DecodeError(DecodeFailure::corrupted_window, axis + " secondary " + std::to_string(l + 1),
                              "digit stream not in secondary sequence");
        residues[l] = *hit;
    }
    return {sys.basis().combine(residues), start[0]};
}

} // namespace detail

/* Decodes the two 6x6 bit planes of one dot window. Both places are found
first; each section then needs the other axis's place, since a column word's
start index is (row + phase) mod 63. */
inline Position decode_window(const SequenceSystem& sys, const BitGrid& xwin, const BitGrid& ywin) {
    for (const BitGrid* g : {&xwin, &ywin})
        if (g->rows() != window_size || g->cols() != window_size)
            throw DomainError("anoto decode: windows must be 6x6, got " + std::to_string(g->rows()) + "x" +
                              std::to_string(g->cols()));
    std::array<std::uint64_t, window_size> cols{}, rows{};
    for (std::size_t k = 0; k < window_size; ++k)
        for (std::size_t t = 0; t < window_size; ++t) {
            cols[k] = cols[k] << 1 | (xwin(t, k) ? 1u : 0u);
            rows[k] = rows[k] << 1 | (ywin(k, t) ? 1u : 0u);
        }
    const auto xr = detail::read_axis(sys, cols, "x");
    const auto yr = detail::read_axis(sys, rows, "y");

    Position pos;
    pos.x = xr.place;
    pos.y = yr.place;
    pos.section_x = static_cast<unsigned>(
        (xr.first_start + 2 * main_length - pos.y % main_length + sys.prefix_diff_sum(pos.x)) % main_length);
    pos.section_y = static_cast<unsigned>(
        (yr.first_start + 2 * main_length - pos.x % main_length + sys.prefix_diff_sum(pos.y)) % main_length);
    return pos;
}

// ---------------------------------------------------------------------------
// Dots

enum class Direction : std::uint8_t { up, right, down, left };

/// (x, y) bits: (0,0) up, (1,0) right, (0,1) left, (1,1) down.
constexpr Direction dot_map(bool xbit, bool ybit) noexcept {
    if (!xbit) return ybit ? Direction::left : Direction::up;
    return ybit ? Direction::down : Direction::right;
}

constexpr std::pair<bool, bool> dot_unmap(Direction d) noexcept {
    switch (d) {
        case Direction::up: return {false, false};
        case Direction::right: return {true, false};
        case Direction::left: return {false, true};
        case Direction::down: return {true, true};
    }
    return {false, false};
}

constexpr char direction_char(Direction d) noexcept {
    constexpr char names[] = {'U', 'R', 'D', 'L'};
    return names[static_cast<int>(d)];
}

inline Direction direction_from_char(char ch) {
    switch (ch) {
        case 'U': return Direction::up;
        case 'R': return Direction::right;
        case 'D': return Direction::down;
        case 'L': return Direction::left;
    }
    throw DomainError(std::string("bad direction '") + ch + "'");
}

class DotGrid {
public:
    DotGrid() = default;
    DotGrid(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), dirs_(rows * cols, Direction::up) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Direction operator()(std::size_t r, std::size_t c) const { return dirs_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Direction d) { dirs_[r * cols_ + c] = d; }

    bool operator==(const DotGrid&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Direction> dirs_;
};

inline DotGrid to_dots(const BitGrid& xbits, const BitGrid& ybits) {
    if (xbits.rows() != ybits.rows() || xbits.cols() != ybits.cols())
        throw DomainError("to_dots: bit planes differ in size");
    DotGrid d(xbits.rows(), xbits.cols());
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) d.set(r, c, dot_map(xbits(r, c), ybits(r, c)));
    return d;
}

inline DotGrid to_dots(const Patch& p) { return to_dots(p.xbits, p.ybits); }

inline std::pair<BitGrid, BitGrid> to_planes(const DotGrid& d) {
    BitGrid x(d.rows(), d.cols()), y(d.rows(), d.cols());
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) {
            const auto [xb, yb] = dot_unmap(d(r, c));
            x.set(r, c, xb);
            y.set(r, c, yb);
        }
    return {x, y};
}

/* Raster rendering: each dot owns a scale x scale cell and is drawn as one
dark pixel displaced scale/4 from the cell center (scale/2, scale/2). */
inline BitGrid render_dots(const DotGrid& dots, unsigned scale) {
    if (scale < 4) throw DomainError("render_dots: scale must be >= 4");
    BitGrid img(dots.rows() * scale, dots.cols() * scale);
    const std::size_t mid = scale / 2, off = scale / 4;
    for (std::size_t r = 0; r < dots.rows(); ++r)
        for (std::size_t c = 0; c < dots.cols(); ++c) {
            std::size_t pr = r * scale + mid, pc = c * scale + mid;
            switch (dots(r, c)) {
                case Direction::up: pr -= off; break;
                case Direction::down: pr += off; break;
                case Direction::left: pc -= off; break;
                case Direction::right: pc += off; break;
            }
            img.set(pr, pc, true);
        }
    return img;
}

inline BitGrid render_dots(const Patch& p, unsigned scale) { return render_dots(to_dots(p), scale); }

/// Inverse of render_dots: each cell's dark pixels vote for the nearest direction.
inline DotGrid read_rendered_dots(const BitGrid& img, unsigned scale) {
    if (scale < 4) throw DomainError("read_rendered_dots: scale must be >= 4");
    if (img.rows() % scale || img.cols() % scale)
        throw DomainError("read_rendered_dots: image size is not a multiple of the scale");
    DotGrid dots(img.rows() / scale, img.cols() / scale);
    const long mid = static_cast<long>(scale / 2);
    for (std::size_t r = 0; r < dots.rows(); ++r)
        for (std::size_t c = 0; c < dots.cols(); ++c) {
            long dy = 0, dx = 0, n = 0;
            for (std::size_t i = 0; i < scale; ++i)
                for (std::size_t j = 0; j < scale; ++j)
                    if (img(r * scale + i, c * scale + j)) {
                        dy += static_cast<long>(i) - mid;
                        dx += static_cast<long>(j) - mid;
                        ++n;
                    }
            const std::string where = "(" + std::to_string(r) + ", " + std::to_string(c) + ")";
            if (n == 0) throw DomainError("read_rendered_dots: no dot in cell " + where);
            const long ady = dy < 0 ? -dy : dy, adx = dx < 0 ? -dx : dx;
            if (ady == adx) throw DomainError("read_rendered_dots: no clear offset in cell " + where);
            if (ady > adx)
                dots.set(r, c, dy < 0 ? Direction::up : Direction::down);
            else
                dots.set(r, c, dx < 0 ? Direction::left : Direction::right);
        }
    return dots;
}

// ---------------------------------------------------------------------------
// Text exports

/// One line per dot row, one U/R/D/L character per dot.
inline void write_dot_grid(const DotGrid& d, std::ostream& os) {
    for (std::size_t r = 0; r < d.rows(); ++r) {
        std::string line(d.cols(), 'U');
        for (std::size_t c = 0; c < d.cols(); ++c) line[c] = direction_char(d(r, c));
        os << line << '\n';
    }
}

inline DotGrid read_dot_grid(std::istream& is) {
    std::vector<std::string> lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!lines.empty() && line.size() != lines.front().size())
            throw ParseError(lineno, "dot row length " + std::to_string(line.size()) + " != " +
                                         std::to_string(lines.front().size()));
        for (char ch : line)
            if (ch != 'U' && ch != 'R' && ch != 'D' && ch != 'L')
                throw ParseError(lineno, std::string("bad direction '") + ch + "'");
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError(lineno, "no dot rows");
    DotGrid d(lines.size(), lines.front().size());
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) d.set(r, c, direction_from_char(lines[r][c]));
    return d;
}

/// Sidecar for exported planes: "section_x section_y x0 y0 w h".
inline void write_patch_header(const Patch& p, std::ostream& os) {
    os << p.section_x << ' ' << p.section_y << ' ' << p.origin_x << ' ' << p.origin_y << ' ' << p.width << ' '
       << p.height << '\n';
}

struct PatchHeader {
    unsigned section_x = 0;
    unsigned section_y = 0;
    std::uint64_t x0 = 0;
    std::uint64_t y0 = 0;
    std::size_t width = 0;
    std::size_t height = 0;

    bool operator==(const PatchHeader&) const = default;
};

inline PatchHeader read_patch_header(std::istream& is) {
    PatchHeader h;
    if (!(is >> h.section_x >> h.section_y >> h.x0 >> h.y0 >> h.width >> h.height))
        throw ParseError(1, "expected 'section_x section_y x0 y0 w h'");
    return h;
}

} // namespace poscode::anoto

#endif
