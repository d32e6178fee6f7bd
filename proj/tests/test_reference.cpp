#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "packmat/packing.hpp"
#include "packmat/reference.hpp"
#include "support.hpp"

using packmat::BigInt;
using packmat::DenseMatrix;
using packmat::schoolbook_multiply;
using packmat::strassen_multiply;
using packmat::StrassenStats;
using testsupport::example_a;
using testsupport::example_b;
using testsupport::example_product;

TEST_CASE("schoolbook multiply") {
    CHECK(schoolbook_multiply(example_a(), example_b()) == example_product());

    const DenseMatrix<BigInt> I = DenseMatrix<BigInt>::identity(3);
    CHECK(schoolbook_multiply(example_a(), I) == example_a());

    const DenseMatrix<BigInt> a(2, 2, {1, -2, -3, 4});
    const DenseMatrix<BigInt> b(2, 2, {5, 6, 7, 8});
    CHECK(schoolbook_multiply(a, b) == DenseMatrix<BigInt>(2, 2, {-9, -10, 13, 14}));

    const DenseMatrix<BigInt> bad(3, 3);
    CHECK_THROWS_AS(schoolbook_multiply(a, bad), std::invalid_argument);
}

TEST_CASE("strassen multiply") {
    SECTION("worked instance at full recursion depth") {
        CHECK(strassen_multiply(example_a(), example_b(), 1) == example_product());
    }
    SECTION("odd size forces padding") {
        std::mt19937_64 rng(101);
        const DenseMatrix<BigInt> a = testsupport::random_signed_matrix(rng, 33, 33, 100000);
        const DenseMatrix<BigInt> b = testsupport::random_signed_matrix(rng, 33, 33, 100000);
        CHECK(strassen_multiply(a, b, 4) == schoolbook_multiply(a, b));
    }
    SECTION("agrees with schoolbook across sizes and cutoffs") {
        std::mt19937_64 rng(103);
        for (int rep = 0; rep < 24; ++rep) {
            const std::size_t n = 1 + testsupport::rand_below(rng, 64);
            const DenseMatrix<BigInt> a = testsupport::random_signed_matrix(rng, n, n, 1000000);
            const DenseMatrix<BigInt> b = testsupport::random_signed_matrix(rng, n, n, 1000000);
            const DenseMatrix<BigInt> want = schoolbook_multiply(a, b);
            for (const std::size_t cutoff : {1ull, 2ull, 16ull, 64ull})
                CHECK(strassen_multiply(a, b, cutoff) == want);
        }
    }
    SECTION("rectangular inputs are padded to the enclosing square") {
        std::mt19937_64 rng(107);
        for (int rep = 0; rep < 12; ++rep) {
            const std::size_t r = 1 + testsupport::rand_below(rng, 12);
            const std::size_t k = 1 + testsupport::rand_below(rng, 12);
            const std::size_t c = 1 + testsupport::rand_below(rng, 12);
            const DenseMatrix<BigInt> a = testsupport::random_signed_matrix(rng, r, k, 100000);
            const DenseMatrix<BigInt> b = testsupport::random_signed_matrix(rng, k, c, 100000);
            CHECK(strassen_multiply(a, b, 2) == schoolbook_multiply(a, b));
        }
    }
    SECTION("cutoff must be positive") {
        CHECK_THROWS_AS(strassen_multiply(example_a(), example_b(), 0), std::invalid_argument);
    }
    SECTION("dimension mismatch") {
        const DenseMatrix<BigInt> a(2, 3), b(2, 2);
        CHECK_THROWS_AS(strassen_multiply(a, b, 1), std::invalid_argument);
    }
    SECTION("live-digit accounting balances") {
        std::mt19937_64 rng(109);
        const DenseMatrix<BigInt> a = testsupport::random_signed_matrix(rng, 12, 12, 100000);
        const DenseMatrix<BigInt> b = testsupport::random_signed_matrix(rng, 12, 12, 100000);
        StrassenStats stats;
        const DenseMatrix<BigInt> got = strassen_multiply(a, b, 2, &stats);
        CHECK(got == schoolbook_multiply(a, b));
        CHECK(stats.live_digits == 0);
        std::uint64_t result_digits = 0;
        for (const BigInt& v : got.data()) result_digits += v.decimal_digit_count();
        CHECK(stats.peak_digits >= result_digits);
    }
}

TEST_CASE("three-way agreement on non-negative inputs") {
    std::mt19937_64 rng(113);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 1 + testsupport::rand_below(rng, 20);
        const DenseMatrix<BigInt> a = testsupport::random_nonneg_matrix(rng, n, n, 100000);
        const DenseMatrix<BigInt> b = testsupport::random_nonneg_matrix(rng, n, n, 100000);
        const DenseMatrix<BigInt> school = schoolbook_multiply(a, b);
        CHECK(packmat::multiply_nonneg(a, b, 10) == school);
        CHECK(strassen_multiply(a, b, 8) == school);
    }
}
