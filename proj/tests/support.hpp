#pragma once
// Shared helpers for the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "packmat/big_int.hpp"
#include "packmat/dense_matrix.hpp"
#include "packmat/exact_decimal.hpp"
#include "packmat/generate.hpp"
#include "packmat/packed_int.hpp"

namespace testsupport {

using packmat::BigInt;
using packmat::DenseMatrix;
using packmat::ExactDecimal;
using packmat::PackedInt;
using packmat::Radix;

inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
    return packmat::bounded_rand(rng, bound);
}

// Random value with exactly `digits` radix-beta digits (top digit nonzero).
inline PackedInt random_packed(std::mt19937_64& rng, const Radix& r, std::size_t digits) {
    PackedInt out(r);
    for (std::size_t i = 0; i < digits; ++i) {
        const std::uint64_t lo = i + 1 == digits ? 1 : 0;
        const std::uint64_t d = lo + rand_below(rng, r.base() - lo);
        out = out + PackedInt::from_value(d, r).shifted(i);
    }
    return out;
}

// Multiplication oracle independent of the general product path: binary
// expansion of b plus repeated doubling.
inline PackedInt peasant_multiply(const PackedInt& a, const PackedInt& b) {
    const PackedInt bits = b.to_radix(Radix(2));
    PackedInt acc(a.radix());
    PackedInt doubled = a;
    const std::size_t nbits = bits.digit_count();
    for (std::size_t i = 0; i < nbits; ++i) {
        if (bits.digit_at(i) != 0) acc = acc + doubled;
        if (i + 1 < nbits) doubled = doubled + doubled;
    }
    return acc;
}

inline DenseMatrix<BigInt> random_signed_matrix(std::mt19937_64& rng, std::size_t rows,
                                                std::size_t cols, std::int64_t magnitude_bound) {
    DenseMatrix<BigInt> out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const std::int64_t mag = static_cast<std::int64_t>(
                rand_below(rng, static_cast<std::uint64_t>(magnitude_bound) + 1));
            out(i, j) = BigInt(rand_below(rng, 2) == 0 ? mag : -mag);
        }
    }
    return out;
}

inline DenseMatrix<BigInt> random_nonneg_matrix(std::mt19937_64& rng, std::size_t rows,
                                                std::size_t cols, std::uint64_t bound) {
    DenseMatrix<BigInt> out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out(i, j) = BigInt(static_cast<std::int64_t>(rand_below(rng, bound)));
    return out;
}

inline DenseMatrix<ExactDecimal> random_decimal_matrix(std::mt19937_64& rng, std::size_t rows,
                                                       std::size_t cols, std::uint64_t bound,
                                                       std::uint32_t max_scale) {
    DenseMatrix<ExactDecimal> out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const std::int64_t mag = static_cast<std::int64_t>(rand_below(rng, bound));
            const std::uint32_t scale =
                static_cast<std::uint32_t>(rand_below(rng, max_scale + 1));
            out(i, j) = ExactDecimal::from_parts(BigInt(rand_below(rng, 2) == 0 ? mag : -mag),
                                                 scale);
        }
    }
    return out;
}

// The worked 3x3 instance used across suites.
inline DenseMatrix<BigInt> example_a() {
    return DenseMatrix<BigInt>(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
}
inline DenseMatrix<BigInt> example_b() {
    return DenseMatrix<BigInt>(3, 3, {9, 8, 7, 6, 5, 4, 3, 2, 1});
}
inline DenseMatrix<BigInt> example_product() {
    return DenseMatrix<BigInt>(3, 3, {30, 24, 18, 84, 69, 54, 138, 114, 90});
}

}  // namespace testsupport
