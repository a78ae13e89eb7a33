#ifndef POSCODE_SEQUENCES_HPP
#define POSCODE_SEQUENCES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace poscode {

namespace detail {

/// k^n, or nullopt if it does not fit in 63 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t k, unsigned n) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (v > (std::uint64_t{1} << 63) / k) return std::nullopt;
        v *= k;
    }
    return v;
}

} // namespace detail

/* A cyclic sequence over {0, ..., k-1} in which every cyclic window of length
n occurs at most once (a quasi-De Bruijn sequence of order n).

Windows are keyed as base-k integers with the first symbol most significant,
so the key order matches lexicographic window order. */
class CyclicSequence {
public:
    CyclicSequence(unsigned alphabet_size, unsigned order, std::vector<std::uint8_t> symbols)
        : k_(alphabet_size), n_(order), symbols_(std::move(symbols)) {
        if (k_ < 2) throw DomainError("alphabet size must be >= 2");
        if (n_ < 1) throw DomainError("order must be >= 1");
        const auto pow = detail::checked_pow(k_, n_);
        if (!pow) throw DomainError("alphabet^order does not fit in 63 bits");
        if (symbols_.size() < n_) throw DomainError("sequence shorter than its order");
        if (symbols_.size() > *pow) throw DomainError("sequence longer than alphabet^order");
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i] >= k_)
                throw DomainError("symbol " + std::to_string(symbols_[i]) + " at index " + std::to_string(i) +
                                  " outside alphabet of size " + std::to_string(k_));
        lookup_.reserve(symbols_.size());
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            auto [it, fresh] = lookup_.emplace(window_key(i), i);
            if (!fresh)
                throw DomainError("cyclic windows at " + std::to_string(it->second) + " and " + std::to_string(i) +
                                  " are equal");
        }
    }

    unsigned alphabet_size() const noexcept { return k_; }
    unsigned order() const noexcept { return n_; }
    std::size_t length() const noexcept { return symbols_.size(); }
    std::span<const std::uint8_t> symbols() const noexcept { return symbols_; }

    unsigned operator[](std::size_t i) const { return symbols_[i % symbols_.size()]; }

    std::uint64_t window_key(std::size_t i) const {
        std::uint64_t key = 0;
        for (unsigned t = 0; t < n_; ++t) key = key * k_ + symbols_[(i + t) % symbols_.size()];
        return key;
    }

    std::vector<unsigned> cyclic_window(std::size_t i) const {
        if (i >= length()) throw RangeError("cyclic_window: index " + std::to_string(i) + " >= " + std::to_string(length()));
        std::vector<unsigned> w(n_);
        for (unsigned t = 0; t < n_; ++t) w[t] = symbols_[(i + t) % symbols_.size()];
        return w;
    }

    std::optional<std::size_t> find_key(std::uint64_t key) const {
        auto it = lookup_.find(key);
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> find(std::span<const unsigned> window) const {
        if (window.size() != n_)
            throw DomainError("window length " + std::to_string(window.size()) + " != order " + std::to_string(n_));
        std::uint64_t key = 0;
        for (unsigned s : window) {
            if (s >= k_) return std::nullopt;
            key = key * k_ + s;
        }
        return find_key(key);
    }

    /// Start index of `window`; throws NotInSequenceError if it does not occur.
    std::size_t locate(std::span<const unsigned> window) const {
        if (auto i = find(window)) return *i;
        std::string text;
        for (unsigned s : window) text += std::to_string(s);
        throw NotInSequenceError("window " + text + " does not occur in the sequence");
    }

    bool operator==(const CyclicSequence& o) const {
        return k_ == o.k_ && n_ == o.n_ && symbols_ == o.symbols_;
    }

private:
    unsigned k_;
    unsigned n_;
    std::vector<std::uint8_t> symbols_;
    std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

/* Lexicographically smallest cyclic sequence of length m over {0..k-1} whose
m cyclic windows of length n are pairwise distinct.

Depth-first search that always tries the smallest symbol first, rejecting a
symbol as soon as the linear window it completes was already used. The n-1
windows that wrap around are checked once the last symbol is placed. The first
complete sequence found is the lexicographic minimum. */
inline CyclicSequence gen_quasi_debruijn(unsigned k, unsigned n, std::size_t m) {
    if (k < 2) throw DomainError("gen_quasi_debruijn: alphabet size must be >= 2");
    if (n < 1) throw DomainError("gen_quasi_debruijn: order must be >= 1");
    const auto pow = detail::checked_pow(k, n);
    if (!pow || m > *pow)
        throw InfeasibleError("gen_quasi_debruijn: length " + std::to_string(m) + " exceeds " + std::to_string(k) +
                              "^" + std::to_string(n) + " distinct windows");
    if (m < n) throw DomainError("gen_quasi_debruijn: length shorter than order");
    if (*pow > (std::uint64_t{1} << 28)) throw DomainError("gen_quasi_debruijn: alphabet^order too large to search");

    const std::uint64_t top = *pow / k; // weight of the oldest symbol in a key
    std::vector<std::uint8_t> used(*pow, 0);
    std::vector<std::uint8_t> seq(m, 0);
    std::vector<int> choice(m, -1);
    // key of the window ending at position p (valid for p >= n-1), or the
    // partial key of the prefix for p < n-1
    std::vector<std::uint64_t> key(m, 0);

    auto wrap_ok = [&]() {
        std::vector<std::uint64_t> extra;
        for (std::size_t s = m - n + 1; s < m; ++s) {
            std::uint64_t w = 0;
            for (unsigned t = 0; t < n; ++t) w = w * k + seq[(s + t) % m];
            if (used[w]) return false;
            for (auto e : extra)
                if (e == w) return false;
            extra.push_back(w);
        }
        return true;
    };

    std::size_t p = 0;
    while (true) {
        // undo the window this position contributed before trying the next symbol
        if (choice[p] >= 0 && p + 1 >= n) used[key[p]] = 0;
        bool advanced = false;
        for (int s = choice[p] + 1; s < static_cast<int>(k); ++s) {
            choice[p] = s;
            seq[p] = static_cast<std::uint8_t>(s);
            const std::uint64_t prev = p == 0 ? 0 : key[p - 1];
            const std::uint64_t kk = (p >= n ? prev % top : prev) * k + static_cast<unsigned>(s);
            if (p + 1 >= n && used[kk]) continue;
            key[p] = kk;
            if (p + 1 >= n) used[kk] = 1;
            if (p + 1 == m) {
                if (wrap_ok()) return CyclicSequence(k, n, std::move(seq));
                used[kk] = 0;
                continue;
            }
            advanced = true;
            break;
        }
        if (advanced) {
            ++p;
            choice[p] = -1;
            continue;
        }
        choice[p] = -1;
        if (p == 0)
            throw NotFoundError("gen_quasi_debruijn: exhaustive search found no sequence with k=" + std::to_string(k) +
                                " n=" + std::to_string(n) + " m=" + std::to_string(m));
        --p;
    }
}

// ---------------------------------------------------------------------------
// phi: {5..58} <-> digit tuples (a1, a2, a3, a4), r = 5 + a1 + 3 a2 + 9 a3 + 18 a4

using PhiDigits = std::array<unsigned, 4>;

inline constexpr std::array<unsigned, 4> phi_radices{3, 3, 2, 3};
inline constexpr std::array<unsigned, 4> phi_weights{1, 3, 9, 18};
inline constexpr unsigned phi_min = 5;
inline constexpr unsigned phi_max = 58;
inline constexpr unsigned phi_count = phi_max - phi_min + 1;

inline PhiDigits phi(unsigned r) {
    if (r < phi_min || r > phi_max)
        throw DomainError("phi: " + std::to_string(r) + " outside {5..58}");
    unsigned v = r - phi_min;
    PhiDigits a{};
    for (std::size_t l = 0; l < 4; ++l) {
        a[l] = v % phi_radices[l];
        v /= phi_radices[l];
    }
    return a;
}

inline unsigned phi_inv(const PhiDigits& a) {
    unsigned r = phi_min;
    for (std::size_t l = 0; l < 4; ++l) {
        if (a[l] >= phi_radices[l])
            throw DomainError("phi_inv: digit " + std::to_string(l + 1) + " = " + std::to_string(a[l]) +
                              " outside {0.." + std::to_string(phi_radices[l] - 1) + "}");
        r += a[l] * phi_weights[l];
    }
    return r;
}

/// Both directions of phi, enumerated.
struct PhiTable {
    std::map<unsigned, PhiDigits> forward;
    std::map<PhiDigits, unsigned> inverse;

    static PhiTable build() {
        PhiTable t;
        for (unsigned a4 = 0; a4 < 3; ++a4)
            for (unsigned a3 = 0; a3 < 2; ++a3)
                for (unsigned a2 = 0; a2 < 3; ++a2)
                    for (unsigned a1 = 0; a1 < 3; ++a1) {
                        const PhiDigits a{a1, a2, a3, a4};
                        const unsigned r = phi_inv(a);
                        t.forward.emplace(r, a);
                        t.inverse.emplace(a, r);
                    }
        return t;
    }
};

// ---------------------------------------------------------------------------
// Chinese remainder recombination

namespace detail {

/// Inverse of a modulo m; a and m coprime, m >= 1.
inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        const __int128 tr = old_r - q * r;
        old_r = r;
        r = tr;
        const __int128 ts = old_s - q * s;
        old_s = s;
        s = ts;
    }
    if (old_r != 1) throw DomainError("mod_inverse: not invertible");
    __int128 v = old_s % static_cast<__int128>(m);
    if (v < 0) v += m;
    return static_cast<std::uint64_t>(v);
}

} // namespace detail

class CrtBasis {
public:
    explicit CrtBasis(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
        if (moduli_.empty()) throw DomainError("CrtBasis: no moduli");
        product_ = 1;
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            if (moduli_[i] == 0) throw DomainError("CrtBasis: zero modulus");
            for (std::size_t j = 0; j < i; ++j)
                if (std::gcd(moduli_[i], moduli_[j]) != 1)
                    throw DomainError("CrtBasis: moduli " + std::to_string(moduli_[j]) + " and " +
                                      std::to_string(moduli_[i]) + " are not coprime");
            if (product_ > (std::uint64_t{1} << 62) / moduli_[i]) throw DomainError("CrtBasis: product overflows");
            product_ *= moduli_[i];
        }
        for (auto m : moduli_) {
            const std::uint64_t rest = product_ / m;
            coefficients_.push_back(rest * detail::mod_inverse(rest % m, m) % product_);
        }
    }

    const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
    std::uint64_t product() const noexcept { return product_; }

    /// The unique v < product() with v = residues[i] (mod moduli()[i]) for all i.
    std::uint64_t combine(std::span<const std::uint64_t> residues) const {
        if (residues.size() != moduli_.size())
            throw DomainError("crt_combine: " + std::to_string(residues.size()) + " residues for " +
                              std::to_string(moduli_.size()) + " moduli");
        unsigned __int128 v = 0;
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            if (residues[i] >= moduli_[i])
                throw DomainError("crt_combine: residue " + std::to_string(residues[i]) + " >= modulus " +
                                  std::to_string(moduli_[i]));
            v = (v + static_cast<unsigned __int128>(residues[i]) * coefficients_[i]) % product_;
        }
        return static_cast<std::uint64_t>(v);
    }

private:
    std::vector<std::uint64_t> moduli_;
    std::uint64_t product_ = 1;
    std::vector<std::uint64_t> coefficients_;
};

inline std::uint64_t crt_combine(std::span<const std::uint64_t> residues, const CrtBasis& basis) {
    return basis.combine(residues);
}

// ---------------------------------------------------------------------------
// Fixture format: "k n m" on the first line, then the m symbols on one line.

inline void write_sequence_fixture(const CyclicSequence& s, std::ostream& os) {
    os << s.alphabet_size() << ' ' << s.order() << ' ' << s.length() << '\n';
    for (std::size_t i = 0; i < s.length(); ++i) os << (i ? " " : "") << s[i];
    os << '\n';
}

inline std::string sequence_fixture(const CyclicSequence& s) {
    std::ostringstream os;
    write_sequence_fixture(s, os);
    return os.str();
}

inline CyclicSequence read_sequence_fixture(std::istream& is) {
    unsigned k = 0, n = 0;
    std::size_t m = 0;
    if (!(is >> k >> n >> m)) throw ParseError(1, "expected header 'k n m'");
    std::vector<std::uint8_t> symbols;
    symbols.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        unsigned v = 0;
        if (!(is >> v)) throw ParseError(2, "expected " + std::to_string(m) + " symbols, found " + std::to_string(i));
        if (v >= k) throw ParseError(2, "symbol " + std::to_string(v) + " outside alphabet");
        symbols.push_back(static_cast<std::uint8_t>(v));
    }
    std::string extra;
    if (is >> extra) throw ParseError(2, "trailing data '" + extra + "'");
    return CyclicSequence(k, n, std::move(symbols));
}

} // namespace poscode

#endif
