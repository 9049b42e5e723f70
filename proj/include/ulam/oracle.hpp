#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ulam/game.hpp"

namespace ulam {

struct BinaryCode {
    int n = 0;                        // length in bits
    std::vector<std::uint32_t> words; // distinct n-bit values
};

/// Ground-truth result of an exhaustive code search. `exists` carries a
/// validated witness; otherwise the backtracking covered the whole canonical
/// space (first word all-zeros, words strictly increasing).
struct SearchCertificate {
    int n = 0;
    long long m = 0;
    int d = 0;
    bool exists = false;
    BinaryCode witness;
    std::uint64_t nodes_explored = 0;
};

struct OracleCaps {
    int max_code_n = 14;  // exhaustive code search length cap
    int minimax_max_m = 6;
    int minimax_max_t = 2;
    int minimax_max_n = 10;
};

/// True iff every pair of words has Hamming distance >= 2t + 1.
/// Throws on duplicate words.
bool validate_code(const BinaryCode& code, int t);

/// Does a binary code of length n, size m, and minimum distance d exist?
/// Exhaustive backtracking; throws when n exceeds the cap.
SearchCertificate code_exists(int n, long long m, int d,
                              const OracleCaps& caps = {});

/// Exact maximum size of a length-n, distance-d binary code.
long long max_code_size(int n, int d, const OracleCaps& caps = {});

enum class Winner { Player1, Player2 };

/// Exact minimax value of the (m, t, n) liar game: Player2 iff an adaptive
/// questioner can always isolate the selected chip within n questions.
/// Memoized on bin-cardinality profiles (chips are exchangeable).
Winner minimax_game(const GameParams& params, const OracleCaps& caps = {});

/// Line-oriented certificate text: query line, verdict line, witness bits.
std::string format_certificate(const SearchCertificate& cert);

}  // namespace ulam
