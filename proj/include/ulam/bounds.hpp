#pragma once

#include <vector>

#include "ulam/exact_int.hpp"

namespace ulam {

struct CodeParams {
    long long m;  // code size (number of codewords), >= 1
    int t;        // error-correction capability in bits, >= 0
    int n;        // candidate code length in bits, where applicable
};

/// The integers K_0..K_n for a candidate length n. K_0 = m * sphere_volume(n, t);
/// each later K_i is the least integer at least K_{i-1}/2 lying in the residue
/// class of m * sphere_volume(n-i, t) modulo gcd_window(n-i, t, i).
struct KSequence {
    CodeParams params;
    std::vector<ExactInt> values;  // size n + 1
};

struct Theorem2Result {
    bool feasible;
    int violating_index;  // first i with K_i > 2^(n-i); -1 when feasible
    ExactInt k_value;     // K at the violating index
    ExactInt capacity;    // 2^(n-i) there
};

struct BoundResult {
    long long m;
    int t;
    int spb_n;  // sphere-packing minimum length
    int new_n;  // refined minimum length (>= spb_n)
    bool improved;
};

/// Sphere-packing feasibility: m * sphere_volume(n, t) <= 2^n, exactly.
bool spb_feasible(int n, long long m, int t);

/// Smallest n with spb_feasible(n, m, t).
int spb_min_length(long long m, int t);

KSequence k_sequence(int n, long long m, int t);

/// True iff K_i <= 2^(n-i) for every 1 <= i <= n; reports the first violation.
Theorem2Result theorem2_check(int n, long long m, int t);
bool theorem2_feasible(int n, long long m, int t);

/// Smallest n >= spb_min_length(m, t) passing the theorem-2 check. Candidates
/// are tested one by one from the sphere-packing start; no monotonicity in n
/// is assumed.
int new_bound_min_length(long long m, int t);

/// One BoundResult per (m, t) pair, ordered by (t, m). Deterministic.
std::vector<BoundResult> sweep(long long m_min, long long m_max,
                               const std::vector<int>& t_list);

}  // namespace ulam
