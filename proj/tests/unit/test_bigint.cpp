#include "qdepth/bigint.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace qdepth;

TEST_CASE("binomial small values") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(62, 31) == BigInt("465428353255261088"));
}

TEST_CASE("binomial out-of-range convention is zero") {
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(-3, -3) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(0, 1) == 0);
}

TEST_CASE("binomial symmetry and Pascal identity") {
    for (long long a = 0; a <= 40; ++a) {
        for (long long b = 0; b <= a; ++b) {
            CHECK(binomial(a, b) == binomial(a, a - b));
            if (a > 0)
                CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
        }
    }
}

TEST_CASE("binomial large exact value") {
    // C(90, 45), past any 64-bit range.
    CHECK(binomial(90, 45) == BigInt("103827421287553411369671120"));
    // Row sum identity at a size the Veronese scans actually reach.
    BigInt sum = 0;
    for (long long b = 0; b <= 61; ++b)
        sum += binomial(61, b);
    CHECK(sum == BigInt(1) << 61);
}

TEST_CASE("decimal conversions roundtrip") {
    CHECK(to_decimal(BigInt(0)) == "0");
    CHECK(to_decimal(BigInt(-17)) == "-17");
    const BigInt big = BigInt("123456789012345678901234567890");
    CHECK(bigint_from_decimal(to_decimal(big)) == big);
    CHECK(bigint_from_decimal("-42") == -42);
    CHECK(bigint_from_decimal("+7") == 7);
}

TEST_CASE("decimal parse rejects junk") {
    CHECK_THROWS_AS(bigint_from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(bigint_from_decimal(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(bigint_from_decimal("0x10"), std::invalid_argument);
    CHECK_THROWS_AS(bigint_from_decimal("12a"), std::invalid_argument);
    CHECK_THROWS_AS(bigint_from_decimal("-"), std::invalid_argument);
}
