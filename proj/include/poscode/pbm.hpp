#ifndef POSCODE_PBM_HPP
#define POSCODE_PBM_HPP

#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "bitgrid.hpp"
#include "errors.hpp"

namespace poscode {

/* Plain (ASCII) PBM, magic "P1". 1 is dark/ink, 0 is light.

Output is always: "P1\n", "<cols> <rows>\n", then one line per grid row with
the bits separated by single spaces. Input also accepts '#' comments and bits
written without separators ("0110"), as other P1 writers produce them. */
inline void write_pbm(const BitGrid& g, std::ostream& os) {
    os << "P1\n" << g.cols() << ' ' << g.rows() << '\n';
    std::string line;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        line.clear();
        for (std::size_t c = 0; c < g.cols(); ++c) {
            if (c) line += ' ';
            line += g(r, c) ? '1' : '0';
        }
        line += '\n';
        os << line;
    }
}

inline std::string to_pbm(const BitGrid& g) {
    std::ostringstream os;
    write_pbm(g, os);
    return os.str();
}

inline void write_pbm(const BitGrid& g, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open " + path + " for writing");
    write_pbm(g, os);
    if (!os) throw Error("write failed: " + path);
}

namespace detail {

class PbmTokenizer {
public:
    explicit PbmTokenizer(std::istream& is) : is_(is) {}

    /// Next whitespace-delimited token; empty at end of input.
    std::string next() {
        std::string tok;
        int ch;
        while ((ch = is_.get()) != EOF) {
            if (ch == '#') {
                while ((ch = is_.get()) != EOF && ch != '\n') {}
                if (ch == EOF) break;
            }
            if (ch == '\n') {
                if (!tok.empty()) {
                    is_.unget();
                    return tok;
                }
                ++line_;
                continue;
            }
            if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f') {
                if (!tok.empty()) return tok;
                continue;
            }
            if (tok.empty()) token_line_ = line_;
            tok += static_cast<char>(ch);
        }
        return tok;
    }

    std::size_t token_line() const noexcept { return token_line_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::istream& is_;
    std::size_t line_ = 1;
    std::size_t token_line_ = 1;
};

inline std::size_t parse_dimension(const std::string& tok, std::size_t line, const char* what) {
    if (tok.empty()) throw ParseError(line, std::string("missing ") + what);
    std::size_t v = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
        v = v * 10 + static_cast<std::size_t>(ch - '0');
        if (v > (std::size_t{1} << 24)) throw ParseError(line, std::string(what) + " too large");
    }
    return v;
}

} // namespace detail

inline BitGrid read_pbm(std::istream& is) {
    detail::PbmTokenizer tz(is);
    const std::string magic = tz.next();
    if (magic != "P1")
        throw ParseError(tz.token_line(), magic.empty() ? "empty input" : "bad magic '" + magic + "', expected P1");
    // read each token before asking for its line
    const std::string width = tz.next();
    const std::size_t cols = detail::parse_dimension(width, tz.token_line(), "width");
    const std::string height = tz.next();
    const std::size_t rows = detail::parse_dimension(height, tz.token_line(), "height");

    BitGrid g(rows, cols);
    const std::size_t total = rows * cols;
    std::size_t n = 0;
    for (std::string tok = tz.next(); !tok.empty(); tok = tz.next()) {
        for (char ch : tok) {
            if (ch != '0' && ch != '1') throw ParseError(tz.token_line(), "non-bit token '" + tok + "'");
            if (n == total)
                throw ParseError(tz.token_line(), "more than " + std::to_string(total) + " bits for " +
                                                      std::to_string(cols) + "x" + std::to_string(rows) + " image");
            g.set(n / cols, n % cols, ch == '1');
            ++n;
        }
    }
    if (n != total)
        throw ParseError(tz.token_line(), "expected " + std::to_string(total) + " bits, found " + std::to_string(n));
    return g;
}

inline BitGrid read_pbm(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open " + path);
    return read_pbm(is);
}

inline BitGrid pbm_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_pbm(is);
}

} // namespace poscode

#endif
