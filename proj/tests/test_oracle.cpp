#include <random>

#include "doctest.h"
#include "ulam/bounds.hpp"
#include "ulam/oracle.hpp"

using namespace ulam;

TEST_CASE("validate_code") {
    // The explicit length-5 code: pairwise distances 3, 4, 3.
    BinaryCode five{5, {0b00000, 0b11100, 0b11011}};
    CHECK(validate_code(five, 1));
    CHECK_FALSE(validate_code(five, 2));

    BinaryCode pair{4, {0b0000, 0b1110}};
    CHECK(validate_code(pair, 1));
    // No third 4-bit word keeps distance three to both.
    for (std::uint32_t w = 0; w < 16; ++w) {
        if (w == pair.words[0] || w == pair.words[1])
            continue;
        BinaryCode extended = pair;
        extended.words.push_back(w);
        CHECK_FALSE(validate_code(extended, 1));
    }

    BinaryCode single{8, {0b10110101}};
    CHECK(validate_code(single, 4));

    BinaryCode dup{3, {0b101, 0b101}};
    CHECK_THROWS_AS(validate_code(dup, 0), std::invalid_argument);
}

TEST_CASE("code_exists verdicts") {
    SearchCertificate none = code_exists(4, 3, 3);
    CHECK_FALSE(none.exists);
    CHECK(none.nodes_explored > 0);

    SearchCertificate some = code_exists(5, 3, 3);
    REQUIRE(some.exists);
    CHECK(some.witness.words.size() == 3);
    CHECK(validate_code(some.witness, 1));

    SearchCertificate hamming = code_exists(7, 16, 3);
    REQUIRE(hamming.exists);
    CHECK(hamming.witness.words.size() == 16);
    CHECK(validate_code(hamming.witness, 1));
}

TEST_CASE("code_exists caps and argument checks") {
    CHECK_THROWS_AS(code_exists(15, 2, 3), std::invalid_argument);
    OracleCaps wide;
    wide.max_code_n = 15;
    CHECK(code_exists(15, 2, 3, wide).exists);
    CHECK_THROWS_AS(code_exists(4, 0, 3), std::invalid_argument);
    CHECK_FALSE(code_exists(2, 5, 1).exists);  // m beyond 2^n
}

TEST_CASE("max_code_size ladder for distance 3") {
    CHECK(max_code_size(4, 3) == 2);
    CHECK(max_code_size(5, 3) == 4);
    CHECK(max_code_size(6, 3) == 8);
    CHECK(max_code_size(7, 3) == 16);
}

TEST_CASE("max_code_size with distance 1 uses every word") {
    for (int n = 1; n <= 6; ++n)
        CHECK(max_code_size(n, 1) == (1LL << n));
}

TEST_CASE("witnesses stay valid under translation") {
    SearchCertificate cert = code_exists(6, 8, 3);
    REQUIRE(cert.exists);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint32_t x = rng() & 0b111111;
        BinaryCode shifted = cert.witness;
        for (auto& w : shifted.words)
            w ^= x;
        CHECK(validate_code(shifted, 1));
    }
}

TEST_CASE("identical queries give identical certificates") {
    SearchCertificate a = code_exists(6, 6, 3);
    SearchCertificate b = code_exists(6, 6, 3);
    CHECK(a.exists == b.exists);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.witness.words == b.witness.words);
    CHECK(format_certificate(a) == format_certificate(b));
}

TEST_CASE("certificate serialization") {
    SearchCertificate cert = code_exists(5, 3, 3);
    std::string text = format_certificate(cert);
    CHECK(text.rfind("query n=5 m=3 d=3\nverdict=exists nodes=", 0) == 0);
    CHECK(text.find("00000\n") != std::string::npos);

    std::string none = format_certificate(code_exists(4, 3, 3));
    CHECK(none.find("verdict=exhausted") != std::string::npos);
}

TEST_CASE("minimax on the worked example") {
    CHECK(minimax_game(GameParams{3, 1, 4}) == Winner::Player1);
    CHECK(minimax_game(GameParams{3, 1, 5}) == Winner::Player2);
}

TEST_CASE("minimax degenerates to binary search without lies") {
    OracleCaps caps;
    caps.minimax_max_m = 9;
    caps.minimax_max_t = 2;
    caps.minimax_max_n = 10;
    for (int k = 0; k <= 3; ++k) {
        int m = 1 << k;
        CHECK(minimax_game(GameParams{m, 0, k}, caps) == Winner::Player2);
        CHECK(minimax_game(GameParams{m + 1, 0, k}, caps) == Winner::Player1);
    }
}

TEST_CASE("minimax caps") {
    CHECK_THROWS_AS(minimax_game(GameParams{7, 1, 5}), std::invalid_argument);
    CHECK_THROWS_AS(minimax_game(GameParams{3, 3, 5}), std::invalid_argument);
    CHECK_THROWS_AS(minimax_game(GameParams{3, 1, 11}), std::invalid_argument);
}

TEST_CASE("oracles agree with the bound search below the bound") {
    OracleCaps caps;
    for (int t = 0; t <= 2; ++t)
        for (int m = 2; m <= 6; ++m) {
            int nb = new_bound_min_length(m, t);
            for (int n = 0; n < nb; ++n) {
                if (n <= caps.minimax_max_n)
                    CHECK(minimax_game(GameParams{m, t, n}, caps) ==
                          Winner::Player1);
                if (n <= caps.max_code_n)
                    CHECK_FALSE(code_exists(n, m, 2 * t + 1, caps).exists);
            }
        }
}
