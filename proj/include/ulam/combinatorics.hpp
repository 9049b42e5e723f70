#pragma once

#include "ulam/exact_int.hpp"

namespace ulam {

/// C(n, k), exact. Returns 0 for k < 0 or k > n.
ExactInt binom(int n, long long k);

/// Volume of the Hamming ball of radius t in n dimensions:
/// sum of C(n, l) for l = 0..t. Equals 2^n once t >= n.
ExactInt sphere_volume(int n, int t);

/// gcd of { C(n_minus_s, l) : l = max(0, t-s+1) .. t }.
/// Zero binomials are absorbed (gcd(0, x) = x); an all-zero window yields 1
/// so the associated congruence imposes no constraint.
ExactInt gcd_window(int n_minus_s, int t, int s);

}  // namespace ulam
