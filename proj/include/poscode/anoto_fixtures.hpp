#ifndef POSCODE_ANOTO_FIXTURES_HPP
#define POSCODE_ANOTO_FIXTURES_HPP

#include <array>
#include <cstdint>

// Frozen secondary number sequences, version 1. Each is the lexicographically
// smallest quasi-De Bruijn sequence of order 5 with the given alphabet and
// length; the generator is re-run against these in the test suite. Files with
// the same content live in tests/fixtures/.

namespace poscode::anoto::fixtures {

inline constexpr unsigned version = 1;

// gen_quasi_debruijn(3, 5, 236)
inline constexpr std::array<std::uint8_t, 236> secondary_1{
    0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 1, 2, 0, 0, 0, 2, 1, 0, 0, 0, 2, 2,
    0, 0, 1, 0, 1, 0, 0, 1, 0, 2, 0, 0, 1, 1, 1, 0, 0, 1, 1, 2, 0, 0, 1, 2, 1, 0, 0, 1, 2, 2, 0,
    0, 2, 0, 1, 0, 0, 2, 0, 2, 0, 0, 2, 1, 1, 0, 0, 2, 1, 2, 0, 0, 2, 2, 1, 0, 0, 2, 2, 2, 0, 1,
    0, 1, 1, 0, 1, 0, 1, 2, 0, 1, 0, 2, 1, 0, 1, 0, 2, 2, 0, 1, 1, 0, 2, 0, 1, 1, 1, 1, 0, 1, 1,
    1, 2, 0, 1, 1, 2, 1, 0, 1, 1, 2, 2, 0, 1, 2, 0, 2, 0, 1, 2, 1, 1, 0, 1, 2, 1, 2, 0, 1, 2, 2,
    1, 0, 1, 2, 2, 2, 0, 2, 0, 2, 1, 0, 2, 0, 2, 2, 0, 2, 1, 1, 1, 0, 2, 1, 1, 2, 0, 2, 1, 2, 1,
    0, 2, 1, 2, 2, 0, 2, 2, 1, 1, 0, 2, 2, 1, 2, 0, 2, 2, 2, 1, 0, 2, 2, 2, 2, 1, 1, 1, 1, 1, 2,
    1, 1, 1, 2, 2, 1, 1, 2, 1, 2, 1, 2, 2, 1, 2, 2, 2, 2, 2};

// gen_quasi_debruijn(3, 5, 233)
inline constexpr std::array<std::uint8_t, 233> secondary_2{
    0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 1, 2, 0, 0, 0, 2, 1, 0, 0, 0, 2, 2,
    0, 0, 1, 0, 1, 0, 0, 1, 0, 2, 0, 0, 1, 1, 1, 0, 0, 1, 1, 2, 0, 0, 1, 2, 1, 0, 0, 1, 2, 2, 0,
    0, 2, 0, 1, 0, 0, 2, 0, 2, 0, 0, 2, 1, 1, 0, 0, 2, 1, 2, 0, 0, 2, 2, 1, 0, 0, 2, 2, 2, 0, 1,
    0, 1, 1, 0, 1, 0, 1, 2, 0, 1, 0, 2, 1, 0, 1, 0, 2, 2, 0, 1, 1, 0, 2, 0, 1, 1, 1, 1, 0, 1, 1,
    1, 2, 0, 1, 1, 2, 1, 0, 1, 1, 2, 2, 0, 1, 2, 0, 2, 0, 1, 2, 1, 1, 0, 1, 2, 1, 2, 0, 1, 2, 2,
    1, 0, 1, 2, 2, 2, 0, 2, 0, 2, 1, 0, 2, 0, 2, 2, 0, 2, 1, 1, 1, 0, 2, 1, 1, 2, 0, 2, 1, 2, 1,
    0, 2, 1, 2, 2, 0, 2, 2, 1, 1, 0, 2, 2, 1, 2, 0, 2, 2, 2, 1, 0, 2, 2, 2, 2, 1, 1, 1, 1, 1, 2,
    1, 1, 1, 2, 2, 1, 1, 2, 1, 2, 1, 1, 2, 2, 2, 2};

// gen_quasi_debruijn(2, 5, 31)
inline constexpr std::array<std::uint8_t, 31> secondary_3{
    0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1};

// gen_quasi_debruijn(3, 5, 241)
inline constexpr std::array<std::uint8_t, 241> secondary_4{
    0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 1, 2, 0, 0, 0, 2, 1, 0, 0, 0, 2, 2,
    0, 0, 1, 0, 1, 0, 0, 1, 0, 2, 0, 0, 1, 1, 1, 0, 0, 1, 1, 2, 0, 0, 1, 2, 1, 0, 0, 1, 2, 2, 0,
    0, 2, 0, 1, 0, 0, 2, 0, 2, 0, 0, 2, 1, 1, 0, 0, 2, 1, 2, 0, 0, 2, 2, 1, 0, 0, 2, 2, 2, 0, 1,
    0, 1, 1, 0, 1, 0, 1, 2, 0, 1, 0, 2, 1, 0, 1, 0, 2, 2, 0, 1, 1, 0, 2, 0, 1, 1, 1, 1, 0, 1, 1,
    1, 2, 0, 1, 1, 2, 1, 0, 1, 1, 2, 2, 0, 1, 2, 0, 2, 0, 1, 2, 1, 1, 0, 1, 2, 1, 2, 0, 1, 2, 2,
    1, 0, 1, 2, 2, 2, 0, 2, 0, 2, 1, 0, 2, 0, 2, 2, 0, 2, 1, 1, 1, 0, 2, 1, 1, 2, 0, 2, 1, 2, 1,
    0, 2, 1, 2, 2, 0, 2, 2, 1, 1, 0, 2, 2, 1, 2, 0, 2, 2, 2, 1, 0, 2, 2, 2, 2, 1, 1, 1, 1, 1, 2,
    1, 1, 1, 2, 2, 1, 1, 2, 1, 2, 2, 1, 2, 1, 1, 2, 2, 2, 1, 2, 2, 2, 2, 2};

} // namespace poscode::anoto::fixtures

#endif
