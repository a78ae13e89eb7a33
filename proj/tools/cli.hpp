#ifndef POSCODE_TOOLS_CLI_HPP
#define POSCODE_TOOLS_CLI_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>

#include "CLI11.hpp"
#include "poscode/poscode.hpp"

namespace poscode::cli {

enum ExitCode : int { ok = 0, failed = 1, usage = 2 };

struct Options {
    std::string scheme;
    std::uint64_t x0 = 0, y0 = 0, w = 0, h = 0;
    unsigned section_x = 0, section_y = 0;
    unsigned scale = 0;
    std::size_t win_h = 0, win_w = 0;
    std::size_t block_i = 0, block_j = 0;
    std::string out, window, window_y;

    CLI::Option *x0_opt = nullptr, *y0_opt = nullptr, *w_opt = nullptr, *h_opt = nullptr;
    CLI::Option *sx_opt = nullptr, *sy_opt = nullptr, *scale_opt = nullptr;
    CLI::Option *win_h_opt = nullptr, *win_w_opt = nullptr;
    CLI::Option *bi_opt = nullptr, *bj_opt = nullptr, *wy_opt = nullptr;

    bool given(const CLI::Option* o) const { return o && o->count() > 0; }
};

class UsageError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline std::string stem_of(const std::string& path) {
    const std::string ext = ".pbm";
    if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
        return path.substr(0, path.size() - ext.size());
    return path;
}

inline std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

/// PBM, or bare rows of 0/1 characters (whitespace between bits optional).
inline BitGrid read_bit_rows(const std::string& path) {
    const std::string text = slurp(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text.compare(first, 2, "P1") == 0) return pbm_from_string(text);

    std::istringstream is(text);
    std::vector<std::string> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string bits;
        for (char ch : line) {
            if (ch == '0' || ch == '1')
                bits += ch;
            else if (ch != ' ' && ch != '\t' && ch != '\r')
                throw ParseError(lineno, std::string("non-bit character '") + ch + "'");
        }
        if (bits.empty()) continue;
        if (!rows.empty() && bits.size() != rows.front().size())
            throw ParseError(lineno, "row has " + std::to_string(bits.size()) + " bits, expected " +
                                         std::to_string(rows.front().size()));
        rows.push_back(bits);
    }
    if (rows.empty()) throw ParseError(std::max<std::size_t>(lineno, 1), "no bit rows");
    BitGrid g(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) g.set(r, c, rows[r][c] == '1');
    return g;
}

inline std::uint64_t pick(const Options& o, const CLI::Option* opt, std::uint64_t value, std::uint64_t fallback) {
    return o.given(opt) ? value : fallback;
}

inline void reject_sections(const Options& o) {
    if (o.given(o.sx_opt) || o.given(o.sy_opt))
        throw UsageError("--section-x/--section-y apply to the anoto scheme only");
}

inline BitGrid crop(const BitGrid& g, std::size_t h, std::size_t w, const std::string& what) {
    if (g.rows() < h || g.cols() < w)
        throw UsageError(what + " window must be at least " + std::to_string(h) + "x" + std::to_string(w) +
                         ", got " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
    return subgrid(g, 0, 0, h, w);
}

inline unsigned narrow(std::uint64_t v, std::uint64_t limit, const char* name) {
    if (v > limit) throw UsageError(std::string(name) + " = " + std::to_string(v) + " out of range");
    return static_cast<unsigned>(v);
}

// -- generate ---------------------------------------------------------------

inline int generate(const Options& o, std::ostream& out) {
    if (o.scheme != "anoto") reject_sections(o);
    if (o.scheme == "rasnik") {
        const auto p = rasnik::tile_pattern(narrow(pick(o, o.x0_opt, o.x0, 0), rasnik::max_x + 1, "--x0"),
                                            narrow(pick(o, o.y0_opt, o.y0, 0), rasnik::max_y + 1, "--y0"),
                                            narrow(pick(o, o.w_opt, o.w, 8), rasnik::max_x + 1, "--w"),
                                            narrow(pick(o, o.h_opt, o.h, 8), rasnik::max_y + 1, "--h"));
        write_pbm(p.bits, o.out);
        out << "wrote " << o.out << " (" << p.bits.rows() << "x" << p.bits.cols() << ")\n";
    } else if (o.scheme == "anoto") {
        const auto& sys = anoto::SequenceSystem::standard();
        const auto p = anoto::generate_patch(sys, o.section_x, o.section_y, pick(o, o.x0_opt, o.x0, 0),
                                             pick(o, o.y0_opt, o.y0, 0), pick(o, o.w_opt, o.w, 32),
                                             pick(o, o.h_opt, o.h, 32));
        const std::string stem = stem_of(o.out);
        write_pbm(p.xbits, stem + ".x.pbm");
        write_pbm(p.ybits, stem + ".y.pbm");
        {
            std::ofstream hdr(stem + ".hdr");
            anoto::write_patch_header(p, hdr);
            std::ofstream dots(stem + ".dots");
            anoto::write_dot_grid(anoto::to_dots(p), dots);
        }
        out << "wrote " << stem << ".x.pbm " << stem << ".y.pbm " << stem << ".hdr " << stem << ".dots";
        if (o.given(o.scale_opt)) {
            write_pbm(anoto::render_dots(p, o.scale), stem + ".render.pbm");
            out << ' ' << stem << ".render.pbm";
        }
        out << '\n';
    } else if (o.scheme == "wavelet") {
        const auto bx = pick(o, o.x0_opt, o.x0, 0), by = pick(o, o.y0_opt, o.y0, 0);
        const auto bw = pick(o, o.w_opt, o.w, wavelet::blocks_per_side - bx);
        const auto bh = pick(o, o.h_opt, o.h, wavelet::blocks_per_side - by);
        const auto p = wavelet::build_pattern();
        const auto g = subgrid(p.bits, 4 * by, 4 * bx, 4 * bh, 4 * bw);
        write_pbm(g, o.out);
        out << "wrote " << o.out << " (" << g.rows() << "x" << g.cols() << ")\n";
    } else {
        const auto col = pick(o, o.x0_opt, o.x0, 0), row = pick(o, o.y0_opt, o.y0, 0);
        const auto g = subgrid(mesh::build_mesh(), row, col, pick(o, o.h_opt, o.h, mesh::pattern_rows - row),
                               pick(o, o.w_opt, o.w, mesh::pattern_cols - col));
        write_pbm(g, o.out);
        out << "wrote " << o.out << " (" << g.rows() << "x" << g.cols() << ")\n";
    }
    return ok;
}

// -- decode -----------------------------------------------------------------

inline int decode(const Options& o, std::ostream& out) {
    if (o.scheme != "wavelet" && (o.given(o.bi_opt) || o.given(o.bj_opt)))
        throw UsageError("--block-i/--block-j apply to the wavelet scheme only");
    if (o.scheme != "anoto" && o.given(o.wy_opt)) throw UsageError("--window-y applies to the anoto scheme only");

    if (o.scheme == "rasnik") {
        const auto p = rasnik::decode_window(crop(read_pbm(o.window), 11, 9, "rasnik"));
        out << "x=" << p.pixel_col << " y=" << p.pixel_row << " block_x=" << p.block_x << " block_y=" << p.block_y
            << '\n';
    } else if (o.scheme == "anoto") {
        BitGrid xw, yw;
        if (o.given(o.wy_opt)) {
            xw = read_pbm(o.window);
            yw = read_pbm(o.window_y);
        } else {
            std::ifstream is(o.window);
            if (!is) throw Error("cannot open " + o.window);
            std::tie(xw, yw) = anoto::to_planes(anoto::read_dot_grid(is));
        }
        const auto p = anoto::decode_window(anoto::SequenceSystem::standard(), crop(xw, 6, 6, "anoto"),
                                            crop(yw, 6, 6, "anoto"));
        out << "x=" << p.x << " y=" << p.y << " section_x=" << p.section_x << " section_y=" << p.section_y << '\n';
    } else if (o.scheme == "wavelet") {
        const auto g = read_pbm(o.window);
        const auto c = wavelet::decode_block(wavelet::block_from_grid(g, 4 * o.block_i, 4 * o.block_j));
        out << "x=" << c.x << " y=" << c.y << '\n';
    } else {
        const auto p = mesh::decode_mesh(crop(read_bit_rows(o.window), 4, 4, "mesh"));
        out << "x=" << p.x << " y=" << p.y << '\n';
    }
    return ok;
}

// -- verify -----------------------------------------------------------------

inline int verify(const Options& o, std::ostream& out) {
    if (o.scheme != "anoto") reject_sections(o);
    UniquenessReport report;
    auto win = [&](std::size_t dh, std::size_t dw) {
        return std::pair{o.given(o.win_h_opt) ? o.win_h : dh, o.given(o.win_w_opt) ? o.win_w : dw};
    };
    if (o.scheme == "rasnik") {
        const auto p = rasnik::tile_pattern(narrow(pick(o, o.x0_opt, o.x0, 0), rasnik::max_x + 1, "--x0"),
                                            narrow(pick(o, o.y0_opt, o.y0, 0), rasnik::max_y + 1, "--y0"),
                                            narrow(pick(o, o.w_opt, o.w, 16), rasnik::max_x + 1, "--w"),
                                            narrow(pick(o, o.h_opt, o.h, 16), rasnik::max_y + 1, "--h"));
        const auto [wh, ww] = win(rasnik::block_rows, rasnik::block_cols);
        report = verify_uniqueness(p.bits, wh, ww, false);
    } else if (o.scheme == "anoto") {
        const auto p = anoto::generate_patch(anoto::SequenceSystem::standard(), o.section_x, o.section_y,
                                             pick(o, o.x0_opt, o.x0, 0), pick(o, o.y0_opt, o.y0, 0),
                                             pick(o, o.w_opt, o.w, 64), pick(o, o.h_opt, o.h, 64));
        const auto dots = anoto::to_dots(p);
        const auto [wh, ww] = win(anoto::window_size, anoto::window_size);
        report = verify_uniqueness_by(
            dots.rows(), dots.cols(), [&](std::size_t r, std::size_t c) { return static_cast<unsigned>(dots(r, c)); },
            wh, ww, false);
    } else if (o.scheme == "wavelet") {
        const auto p = wavelet::build_pattern();
        if (o.given(o.win_h_opt) || o.given(o.win_w_opt)) {
            const auto [wh, ww] = win(wavelet::block_size, wavelet::block_size);
            report = verify_uniqueness(p.bits, wh, ww, false);
        } else {
            // delimiters fix the alignment, so compare whole blocks: one cell per block
            report = verify_uniqueness_by(
                wavelet::blocks_per_side, wavelet::blocks_per_side,
                [&](std::size_t i, std::size_t j) {
                    return wavelet::block_from_grid(p.bits, wavelet::block_size * i, wavelet::block_size * j).bits();
                },
                1, 1, false);
        }
    } else {
        const auto [wh, ww] = win(4, 4);
        report = verify_uniqueness(mesh::build_mesh(), wh, ww, false);
    }
    out << "duplicates=" << report.duplicate_pairs() << '\n';
    return report.unique() ? ok : failed;
}

// -- tables -----------------------------------------------------------------

inline int tables(std::ostream& out) {
    const auto& sys = anoto::SequenceSystem::standard();
    out << "# main\n";
    write_sequence_fixture(sys.main(), out);
    for (std::size_t l = 0; l < 4; ++l) {
        out << "# secondary " << l + 1 << '\n';
        write_sequence_fixture(sys.secondary(l), out);
    }
    out << "# phi: r a1 a2 a3 a4\n";
    for (const auto& [r, a] : PhiTable::build().forward)
        out << r << ' ' << a[0] << ' ' << a[1] << ' ' << a[2] << ' ' << a[3] << '\n';
    return ok;
}

} // namespace detail

/// Runs one command line. Returns 0 on success, 1 when a decode or verification fails, 2 on usage errors.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generate, decode and verify 2D position-coding patterns", "poscode"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help and exit"); // frees -h; --h is the region height
    Options o;
    const std::vector<std::string> schemes{"rasnik", "anoto", "wavelet", "mesh"};

    auto add_scheme = [&](CLI::App* sub) {
        sub->add_option("--scheme", o.scheme, "rasnik | anoto | wavelet | mesh")
            ->required()
            ->check(CLI::IsMember(schemes));
    };
    // generate and verify both take a region; each keeps its own option handles
    using Region = std::array<CLI::Option*, 6>;
    auto add_region = [&](CLI::App* sub) {
        return Region{sub->add_option("--x0", o.x0, "left edge (blocks for rasnik/wavelet, cells otherwise)"),
                      sub->add_option("--y0", o.y0, "top edge"), sub->add_option("--w", o.w, "width"),
                      sub->add_option("--h", o.h, "height"),
                      sub->add_option("--section-x", o.section_x, "anoto x section")->check(CLI::Range(0u, 62u)),
                      sub->add_option("--section-y", o.section_y, "anoto y section")->check(CLI::Range(0u, 62u))};
    };
    auto use_region = [&o](const Region& r) {
        std::tie(o.x0_opt, o.y0_opt, o.w_opt, o.h_opt, o.sx_opt, o.sy_opt) = std::tuple_cat(r);
    };

    auto* gen = app.add_subcommand("generate", "write a pattern as PBM (anoto: planes, header and dot file)");
    add_scheme(gen);
    const Region gen_region = add_region(gen);
    gen->add_option("--out", o.out, "output file")->required();
    o.scale_opt = gen->add_option("--scale", o.scale, "anoto: also render dots at this cell size")
                      ->check(CLI::Range(4u, 64u));

    auto* dec = app.add_subcommand("decode", "decode a window file and print its position");
    add_scheme(dec);
    dec->add_option("--window", o.window, "window file")->required();
    o.wy_opt = dec->add_option("--window-y", o.window_y, "anoto: y-plane PBM (--window is then the x plane)");
    o.bi_opt = dec->add_option("--block-i", o.block_i, "wavelet: block row inside the window file");
    o.bj_opt = dec->add_option("--block-j", o.block_j, "wavelet: block column inside the window file");

    auto* ver = app.add_subcommand("verify", "check that every window of a pattern is unique");
    add_scheme(ver);
    const Region ver_region = add_region(ver);
    o.win_h_opt = ver->add_option("--win-h", o.win_h, "window height")->check(CLI::PositiveNumber);
    o.win_w_opt = ver->add_option("--win-w", o.win_w, "window width")->check(CLI::PositiveNumber);

    auto* tab = app.add_subcommand("tables", "print the frozen sequences and the phi table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (gen->parsed()) {
            use_region(gen_region);
            return detail::generate(o, out);
        }
        if (dec->parsed()) return detail::decode(o, out);
        if (ver->parsed()) {
            use_region(ver_region);
            return detail::verify(o, out);
        }
        if (tab->parsed()) return detail::tables(out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const RangeError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return failed;
    }
    return usage;
}

} // namespace poscode::cli

#endif
