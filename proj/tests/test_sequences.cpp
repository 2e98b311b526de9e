#include <catch2/catch_amalgamated.hpp>

#include "linklab/sequences.hpp"

using namespace linklab;

TEST_CASE("alpha_prime recurrence values") {
    const long long expected[] = {1, 2, 5, 10, 21, 42, 85, 170, 341, 682};
    for (int m = 1; m <= 10; ++m) REQUIRE(alpha_prime(m) == expected[m - 1]);
    REQUIRE_THROWS_AS(alpha_prime(0), InvalidArgument);
}

TEST_CASE("alpha_prime closed form agrees at odd indices") {
    for (int m = 1; m <= 12; ++m) REQUIRE(alpha_prime(2 * m - 1) == alpha_prime_closed_form_odd(m));
}

TEST_CASE("zeta values") {
    REQUIRE(zeta(5) == 54);    // 6*3*3
    REQUIRE(zeta(8) == 180);   // 9*4*5
    REQUIRE(zeta(16) == 11016);  // 17*8*81
    REQUIRE_THROWS_AS(zeta(1), InvalidArgument);
}

TEST_CASE("zeta small-n flag and values") {
    REQUIRE(zeta_small_n(2));
    REQUIRE(zeta_small_n(4));
    REQUIRE_FALSE(zeta_small_n(5));
    REQUIRE(zeta(3) == 8);   // 4*2*2^0
    REQUIRE(zeta(4) == 10);  // 5*2*3^0
    REQUIRE(zeta(2) == 2);   // 3*1*2^-1 = 3/2, rounded up
}

TEST_CASE("eta values") {
    REQUIRE(eta(5) == 1197);  // 21 * 57
    REQUIRE(eta(6) == 3654);  // 42 * 87, zeta_6 = 7*3*4 = 84
    REQUIRE(eta(5) == alpha_prime_closed_form_odd(3) * (zeta(5) + 3));
}

TEST_CASE("zeta growth inequality") {
    // n=5: 2*3*3 + 2 = 20 >= 6*3*1 = 18
    REQUIRE(check_zeta_growth(5));
    REQUIRE(check_zeta_growth(6));
    for (int n = 5; n <= 64; ++n) REQUIRE(check_zeta_growth(n));
    REQUIRE_THROWS_AS(check_zeta_growth(4), InvalidArgument);
}

TEST_CASE("ceil_log2") {
    REQUIRE(ceil_log2(1) == 0);
    REQUIRE(ceil_log2(2) == 1);
    REQUIRE(ceil_log2(5) == 3);
    REQUIRE(ceil_log2(8) == 3);
    REQUIRE(ceil_log2(9) == 4);
}
