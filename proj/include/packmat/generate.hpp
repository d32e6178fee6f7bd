#pragma once
// generate.hpp - deterministic random matrix generation for the benchmark
// harness and the file tool. Same seed, same matrices, on any platform.

#include <cstdint>
#include <random>
#include <stdexcept>

#include "packmat/big_int.hpp"
#include "packmat/complex_multiply.hpp"
#include "packmat/dense_matrix.hpp"
#include "packmat/exact_decimal.hpp"

namespace packmat {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Unbiased draw from [0, bound) by rejection.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bounded_rand: empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

inline std::uint64_t pow10_u64(std::uint32_t e) {
    if (e > 19) throw std::invalid_argument("pow10_u64: exponent too large");
    std::uint64_t p = 1;
    while (e-- > 0) p *= 10;
    return p;
}

// Non-negative integer matrix, entries uniform in [0, 10^element_digits).
template <typename S>
DenseMatrix<S> generate_matrix(std::size_t n, std::uint32_t element_digits, std::uint64_t seed);

template <>
inline DenseMatrix<BigInt> generate_matrix<BigInt>(std::size_t n, std::uint32_t element_digits,
                                                   std::uint64_t seed) {
    if (n < 1 || element_digits < 1)
        throw std::invalid_argument("generate_matrix: invalid parameters");
    std::mt19937_64 rng(seed);
    const std::uint64_t bound = pow10_u64(element_digits);
    DenseMatrix<BigInt> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = BigInt(static_cast<std::int64_t>(bounded_rand(rng, bound)));
    return out;
}

// Signed decimal matrix: uniform sign, magnitude uniform in [0, 10^element_digits),
// fraction-digit count uniform in [0, min(6, element_digits)].
template <>
inline DenseMatrix<ExactDecimal> generate_matrix<ExactDecimal>(std::size_t n,
                                                               std::uint32_t element_digits,
                                                               std::uint64_t seed) {
    if (n < 1 || element_digits < 1)
        throw std::invalid_argument("generate_matrix: invalid parameters");
    std::mt19937_64 rng(seed);
    const std::uint64_t bound = pow10_u64(element_digits);
    const std::uint32_t max_frac = std::min<std::uint32_t>(6, element_digits);
    DenseMatrix<ExactDecimal> out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t mag = static_cast<std::int64_t>(bounded_rand(rng, bound));
            const bool negative = bounded_rand(rng, 2) == 1;
            const std::uint32_t frac = static_cast<std::uint32_t>(bounded_rand(rng, max_frac + 1));
            out(i, j) = ExactDecimal::from_parts(BigInt(negative ? -mag : mag), frac);
        }
    }
    return out;
}

inline ComplexMatrix generate_complex_matrix(std::size_t n, std::uint32_t element_digits,
                                             std::uint64_t seed) {
    return {generate_matrix<ExactDecimal>(n, element_digits, mix64(seed ^ 0x7265616cull)),
            generate_matrix<ExactDecimal>(n, element_digits, mix64(seed ^ 0x696d6167ull))};
}

}  // namespace packmat
