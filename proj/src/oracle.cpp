#include "ulam/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ulam {

namespace {

struct CodeSearch {
    int n;
    long long m;
    int d;
    std::uint32_t word_count;  // 2^n
    std::vector<std::uint32_t> chosen;
    std::uint64_t nodes = 0;

    bool compatible(std::uint32_t w) const {
        for (std::uint32_t c : chosen)
            if (std::popcount(w ^ c) < d)
                return false;
        return true;
    }

    // Words are forced strictly increasing with the first fixed to zero;
    // Hamming distance is translation invariant, so this loses nothing.
    bool extend(std::uint32_t next_start) {
        ++nodes;
        if (static_cast<long long>(chosen.size()) == m)
            return true;
        long long needed = m - static_cast<long long>(chosen.size());
        for (std::uint32_t w = next_start; w < word_count; ++w) {
            if (static_cast<long long>(word_count - w) < needed)
                break;
            if (!compatible(w))
                continue;
            chosen.push_back(w);
            if (extend(w + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

bool validate_code(const BinaryCode& code, int t) {
    if (t < 0)
        throw std::invalid_argument("validate_code: t must be >= 0");
    int d = 2 * t + 1;
    for (size_t i = 0; i < code.words.size(); ++i) {
        for (size_t j = i + 1; j < code.words.size(); ++j) {
            if (code.words[i] == code.words[j])
                throw std::invalid_argument("validate_code: duplicate codeword");
            if (std::popcount(code.words[i] ^ code.words[j]) < d)
                return false;
        }
    }
    return true;
}

SearchCertificate code_exists(int n, long long m, int d, const OracleCaps& caps) {
    if (n < 0 || m < 1 || d < 1)
        throw std::invalid_argument("code_exists: need n >= 0, m >= 1, d >= 1");
    if (n > caps.max_code_n)
        throw std::invalid_argument("code_exists: n exceeds search cap " +
                                    std::to_string(caps.max_code_n));
    SearchCertificate cert;
    cert.n = n;
    cert.m = m;
    cert.d = d;
    CodeSearch search{n, m, d, std::uint32_t(1) << n, {}, 0};
    if (m <= static_cast<long long>(search.word_count)) {
        search.chosen.push_back(0);
        cert.exists = search.extend(1);
    }
    cert.nodes_explored = search.nodes;
    if (cert.exists)
        cert.witness = BinaryCode{n, search.chosen};
    return cert;
}

long long max_code_size(int n, int d, const OracleCaps& caps) {
    long long m = 1;
    while (code_exists(n, m + 1, d, caps).exists)
        ++m;
    return m;
}

namespace {

using Profile = std::vector<int>;  // bin cardinalities |V_0|..|V_t|

struct MinimaxSolver {
    std::map<std::pair<Profile, int>, bool> memo;

    bool questioner_wins(const Profile& v, int remaining) {
        int total = std::accumulate(v.begin(), v.end(), 0);
        if (total <= 1)
            return true;
        if (remaining == 0)
            return false;
        auto key = std::make_pair(v, remaining);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;

        size_t bins = v.size();
        Profile u(bins, 0);
        bool win = false;
        // Enumerate how many chips of each bin the question takes; the
        // complement question mirrors Yes/No, so skip the mirrored half.
        while (true) {
            Profile comp(bins);
            for (size_t i = 0; i < bins; ++i)
                comp[i] = v[i] - u[i];
            if (!(comp < u)) {  // skip the mirrored half of the questions
                Profile yes(bins, 0), no(bins, 0);
                yes[0] = u[0];
                no[0] = v[0] - u[0];
                for (size_t i = 1; i < bins; ++i) {
                    yes[i] = u[i] + (v[i - 1] - u[i - 1]);
                    no[i] = (v[i] - u[i]) + u[i - 1];
                }
                if (questioner_wins(yes, remaining - 1) &&
                    questioner_wins(no, remaining - 1)) {
                    win = true;
                    break;
                }
            }
            // next mixed-radix tuple
            size_t i = 0;
            while (i < bins && u[i] == v[i])
                u[i++] = 0;
            if (i == bins)
                break;
            ++u[i];
        }
        memo.emplace(key, win);
        return win;
    }
};

}  // namespace

Winner minimax_game(const GameParams& params, const OracleCaps& caps) {
    if (params.m < 1 || params.t < 0 || params.n < 0)
        throw std::invalid_argument("minimax_game: invalid parameters");
    if (params.m > caps.minimax_max_m || params.t > caps.minimax_max_t ||
        params.n > caps.minimax_max_n)
        throw std::invalid_argument("minimax_game: parameters exceed caps");
    MinimaxSolver solver;
    Profile start(static_cast<size_t>(params.t) + 1, 0);
    start[0] = params.m;
    return solver.questioner_wins(start, params.n) ? Winner::Player2
                                                   : Winner::Player1;
}

std::string format_certificate(const SearchCertificate& cert) {
    std::ostringstream out;
    out << "query n=" << cert.n << " m=" << cert.m << " d=" << cert.d << "\n";
    out << "verdict=" << (cert.exists ? "exists" : "exhausted")
        << " nodes=" << cert.nodes_explored << "\n";
    if (cert.exists) {
        for (std::uint32_t w : cert.witness.words) {
            std::string bits(static_cast<size_t>(cert.n), '0');
            for (int b = 0; b < cert.n; ++b)
                if (w & (std::uint32_t(1) << (cert.n - 1 - b)))
                    bits[static_cast<size_t>(b)] = '1';
            out << bits << "\n";
        }
    }
    return out.str();
}

}  // namespace ulam
