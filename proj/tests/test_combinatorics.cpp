#include <bit>
#include <cstdint>
#include <random>

#include "doctest.h"
#include "ulam/combinatorics.hpp"

using namespace ulam;

TEST_CASE("binom base cases") {
    CHECK(binom(4, 1) == ExactInt(4));
    CHECK(binom(0, 0) == ExactInt(1));
    CHECK(binom(23, 3) == ExactInt(1771));
    CHECK(binom(5, -1) == ExactInt(0));
    CHECK(binom(5, 6) == ExactInt(0));
    CHECK_THROWS_AS(binom(-1, 0), std::invalid_argument);
}

TEST_CASE("binom(23,3) against the direct product") {
    CHECK(binom(23, 3) == ExactInt(23 * 22 * 21 / 6));
}

TEST_CASE("Pascal identity over the full small triangle") {
    for (int n = 1; n <= 64; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("Pascal identity, randomized sample beyond 64") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> n_dist(65, 120);
    for (int trial = 0; trial < 200; ++trial) {
        int n = n_dist(rng);
        int k = std::uniform_int_distribution<int>(1, std::min(n, 12))(rng);
        CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
    }
}

TEST_CASE("binom symmetry and row sums") {
    for (int n = 0; n <= 64; ++n) {
        ExactInt sum(0);
        for (int k = 0; k <= n; ++k) {
            CHECK(binom(n, k) == binom(n, n - k));
            sum += binom(n, k);
        }
        CHECK(sum == ExactInt::pow2(static_cast<unsigned>(n)));
    }
}

TEST_CASE("sphere_volume examples") {
    CHECK(sphere_volume(4, 1) == ExactInt(5));
    for (int n = 0; n <= 20; ++n)
        CHECK(sphere_volume(n, 0) == ExactInt(1));
    CHECK(sphere_volume(23, 3) == ExactInt(2048));
}

TEST_CASE("sphere_volume(23, 3) against word enumeration") {
    // Independent oracle: count every 23-bit word of weight at most 3.
    long long count = 0;
    for (std::uint32_t w = 0; w < (1u << 23); ++w)
        if (std::popcount(w) <= 3)
            ++count;
    CHECK(sphere_volume(23, 3) == ExactInt(count));
}

TEST_CASE("sphere_volume increases in t, then saturates at 2^n") {
    for (int n = 0; n <= 16; ++n) {
        for (int t = 0; t < n; ++t)
            CHECK(sphere_volume(n, t) < sphere_volume(n, t + 1));
        for (int t = n; t <= n + 3; ++t)
            CHECK(sphere_volume(n, t) == ExactInt::pow2(static_cast<unsigned>(n)));
    }
}

TEST_CASE("gcd_window examples") {
    CHECK(gcd_window(3, 1, 1) == ExactInt(3));
    CHECK(gcd_window(3, 1, 2) == ExactInt(1));
    CHECK(gcd_window(6, 1, 1) == ExactInt(6));
    CHECK_THROWS_AS(gcd_window(3, 1, 0), std::invalid_argument);
}

TEST_CASE("gcd_window divides every binomial in its window") {
    for (int nm = 0; nm <= 20; ++nm)
        for (int t = 0; t <= 4; ++t)
            for (int s = 1; s <= 8; ++s) {
                ExactInt g = gcd_window(nm, t, s);
                CHECK(g > ExactInt(0));
                for (int l = std::max(0, t - s + 1); l <= t; ++l) {
                    ExactInt b = binom(nm, l);
                    if (!b.is_zero())
                        CHECK(b.mod_euclid(g) == ExactInt(0));
                }
            }
}

TEST_CASE("gcd_window with lower index clamped to zero is 1") {
    // Window reaches C(.,0) = 1 whenever s > t, pinning the gcd to 1.
    for (int nm = 0; nm <= 10; ++nm)
        for (int t = 0; t <= 3; ++t)
            CHECK(gcd_window(nm, t, t + 2) == ExactInt(1));
}

TEST_CASE("gcd_window all-zero window yields 1") {
    // n - s = 0 with a window of strictly positive lower index.
    CHECK(gcd_window(0, 3, 2) == ExactInt(1));
}

TEST_CASE("ExactInt overflow is detected, not wrapped") {
    CHECK_THROWS_AS(binom(200, 100), OverflowError);
    CHECK_THROWS_AS(ExactInt::pow2(127), OverflowError);
    ExactInt big = ExactInt::pow2(126);
    CHECK_THROWS_AS(big * ExactInt(2), OverflowError);
    CHECK_THROWS_AS(big + big, OverflowError);
}

TEST_CASE("ExactInt string conversion and Euclidean mod") {
    CHECK(ExactInt(0).str() == "0");
    CHECK(ExactInt(-42).str() == "-42");
    CHECK(ExactInt::pow2(100).str() == "1267650600228229401496703205376");
    CHECK(ExactInt(-6).mod_euclid(ExactInt(4)) == ExactInt(2));
    CHECK(ExactInt(7).ceil_half() == ExactInt(4));
    CHECK(ExactInt(8).ceil_half() == ExactInt(4));
}
