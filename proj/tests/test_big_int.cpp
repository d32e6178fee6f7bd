#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "packmat/big_int.hpp"
#include "support.hpp"

using packmat::BigInt;
using packmat::PackedInt;
using packmat::Radix;

TEST_CASE("construction and strings") {
    CHECK(BigInt().is_zero());
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-42).to_string() == "-42");
    CHECK(BigInt::from_string("-0").is_zero());
    CHECK(BigInt::from_string("+123").to_string() == "123");
    CHECK(BigInt::from_string("184467440737095516150000000001").to_string() ==
          "184467440737095516150000000001");
    CHECK(BigInt(std::int64_t{-9223372036854775807} - 1).to_string() == "-9223372036854775808");
}

TEST_CASE("signed arithmetic agrees with host integers") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 500; ++rep) {
        const std::int64_t a =
            static_cast<std::int64_t>(testsupport::rand_below(rng, 2000000001)) - 1000000000;
        const std::int64_t b =
            static_cast<std::int64_t>(testsupport::rand_below(rng, 2000000001)) - 1000000000;
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("magnitude re-encoding") {
    const BigInt v = BigInt::from_string("1002003");
    CHECK(v.magnitude_in(Radix(10)).to_decimal_string() == "1002003");
    CHECK(v.magnitude_in(Radix(10)).digit_count() == 7);
    CHECK(v.magnitude_in(Radix(2)).digit_count() == 20);
}

TEST_CASE("decimal digit count") {
    CHECK(BigInt().decimal_digit_count() == 0);
    CHECK(BigInt(7).decimal_digit_count() == 1);
    CHECK(BigInt(-1000).decimal_digit_count() == 4);
    CHECK(BigInt::from_string("123456789012345678901").decimal_digit_count() == 21);
}

TEST_CASE("scaling by powers of ten") {
    CHECK(packmat::times_pow10(BigInt(25), 0) == BigInt(25));
    CHECK(packmat::times_pow10(BigInt(-3), 4) == BigInt(-30000));
    CHECK(packmat::times_pow10(BigInt(1), 25).to_string() == "10000000000000000000000000");
}
